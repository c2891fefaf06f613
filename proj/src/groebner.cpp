#include "irrep/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace irrep {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Pair {
  std::uint32_t deg;  // total degree of the lcm of the leading monomials
  std::uint64_t serial;
  std::uint32_t i, j;
  bool operator>(const Pair& o) const {
    if (deg != o.deg) return deg > o.deg;
    return serial > o.serial;
  }
};

struct PairKey {
  std::uint32_t i, j;
  bool operator<(const PairKey& o) const { return i < o.i || (i == o.i && j < o.j); }
};

PairKey key(std::uint32_t a, std::uint32_t b) { return {std::min(a, b), std::max(a, b)}; }

// working polynomial during division, largest monomial first; reduction steps
// only cancel the leading term and merge in a divisor's tail, never rebuild
// the whole term list
struct MonoCmpDesc {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b, *ord) == Cmp::Greater;
  }
};
using WorkPoly = std::map<Monomial, Scalar, MonoCmpDesc>;

WorkPoly work_from(const Polynomial& f, const MonomialOrder& ord) {
  WorkPoly w{MonoCmpDesc{&ord}};
  for (const Term& t : f.terms()) w.emplace(t.m, t.c);
  return w;
}

// cancel w's leading term against g (leading monomials divide): add
// (-lc/LC(g))*m*g for m = lm/LM(g); the leading entry vanishes exactly
void cancel_leading(WorkPoly& w, const Polynomial& g) {
  auto lead = w.begin();
  const Term& gl = g.leading();
  Scalar c = -(lead->second / gl.c);
  Monomial m = lead->first.div(gl.m);
  w.erase(lead);
  const auto& ts = g.terms();
  for (std::size_t i = 1; i < ts.size(); ++i) {
    Monomial mm = ts[i].m.mul(m);
    auto [it, fresh] = w.emplace(std::move(mm), ts[i].c * c);
    if (!fresh) {
      it->second = it->second + ts[i].c * c;
      if (it->second.is_zero()) w.erase(it);
    }
  }
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord) {
  Polynomial fo = f.with_order(ord);
  if (basis.empty()) return fo;
  WorkPoly w = work_from(fo, ord);
  std::vector<Term> done;  // terms no divisor can touch, already in order
  while (!w.empty()) {
    auto lead = w.begin();
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (g.is_zero()) continue;
      if (lead->first.divisible_by(g.leading().m)) {
        cancel_leading(w, g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      done.push_back(Term{lead->second, lead->first});
      w.erase(lead);
    }
  }
  return Polynomial::from_sorted(f.ctx(), ord, std::move(done));
}

namespace {

// one reduction pass used inside buchberger: full normal form against the
// current (unreduced) basis, tracking max intermediate degree; a deadline of
// 0 means none, otherwise the reduction aborts (signalled through timed_out)
// so a single giant reduction cannot blow past the seconds budget
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, std::uint32_t& max_deg,
                       const Clock::time_point& t0, double deadline, bool& timed_out) {
  WorkPoly w = work_from(f, ord);
  std::vector<Term> done;
  std::uint64_t steps = 0;
  while (!w.empty()) {
    if (deadline > 0 && (++steps & 0x3ff) == 0 && seconds_since(t0) > deadline) {
      timed_out = true;
      return f;
    }
    auto lead = w.begin();
    max_deg = std::max(max_deg, lead->first.deg);
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (lead->first.divisible_by(g.leading().m)) {
        cancel_leading(w, g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      done.push_back(Term{lead->second, lead->first});
      w.erase(lead);
    }
  }
  return Polynomial::from_sorted(f.ctx(), ord, std::move(done));
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  const Term& lf = f.leading();
  const Term& lg = g.leading();
  Monomial l = Monomial::lcm(lf.m, lg.m);
  Polynomial a = Polynomial::zero(f.ctx(), ord).add_scaled(f, lf.c.inv(), l.div(lf.m));
  return a.add_scaled(g, -(lg.c.inv()), l.div(lg.m));
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& ord,
                         const Budget& budget, std::size_t gb_prefix) {
  auto t0 = Clock::now();
  GroebnerBasis out;
  out.order = ord;
  GroebnerStats& st = out.stats;

  std::vector<Polynomial> basis;
  RingPtr ctx;
  for (const Polynomial& g : generators) {
    if (!ctx) ctx = g.ctx();
    if (g.is_zero()) continue;
    basis.push_back(g.with_order(ord).normalized());
  }

  auto finish_unit = [&]() {
    out.ok = true;
    out.polys = {Polynomial::of_int(ctx, 1)};
    st.basis_size = 1;
    st.wall_seconds = seconds_since(t0);
    return out;
  };

  if (basis.empty()) {
    out.ok = true;
    st.wall_seconds = seconds_since(t0);
    return out;
  }
  for (const Polynomial& g : basis)
    if (g.is_constant()) return finish_unit();

  std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> queue;
  std::set<PairKey> treated;  // processed or validly skipped
  std::uint64_t serial = 0;

  auto push_pair = [&](std::uint32_t i, std::uint32_t j) {
    const Monomial& a = basis[i].leading().m;
    const Monomial& b = basis[j].leading().m;
    if (Monomial::coprime(a, b)) {  // Buchberger's first criterion
      treated.insert(key(i, j));
      return;
    }
    queue.push({Monomial::lcm(a, b).deg, serial++, i, j});
  };

  std::size_t prefix = std::min(gb_prefix, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (j < prefix) {
        treated.insert(key((std::uint32_t)i, (std::uint32_t)j));
        continue;
      }
      push_pair((std::uint32_t)i, (std::uint32_t)j);
    }

  while (!queue.empty()) {
    if (budget.max_spairs && st.spairs_processed >= budget.max_spairs) {
      st.budget_exhausted = true;
      st.exhausted_reason = "spairs";
      break;
    }
    if (budget.max_polys && basis.size() >= budget.max_polys) {
      st.budget_exhausted = true;
      st.exhausted_reason = "polys";
      break;
    }
    if (budget.max_seconds > 0 && seconds_since(t0) > budget.max_seconds) {
      st.budget_exhausted = true;
      st.exhausted_reason = "seconds";
      break;
    }

    Pair p = queue.top();
    queue.pop();
    PairKey pk = key(p.i, p.j);
    if (treated.count(pk)) continue;

    // chain criterion: skip if some k divides the lcm and both (i,k), (j,k)
    // are already treated
    Monomial l = Monomial::lcm(basis[p.i].leading().m, basis[p.j].leading().m);
    bool chain = false;
    for (std::uint32_t k = 0; k < basis.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!l.divisible_by(basis[k].leading().m)) continue;
      if (treated.count(key(p.i, k)) && treated.count(key(p.j, k))) {
        chain = true;
        break;
      }
    }
    treated.insert(pk);
    if (chain) continue;

    ++st.spairs_processed;
    Polynomial s = spoly(basis[p.i], basis[p.j], ord);
    bool timed_out = false;
    Polynomial r = reduce_full(s, basis, ord, st.max_degree, t0, budget.max_seconds, timed_out);
    if (timed_out) {
      st.budget_exhausted = true;
      st.exhausted_reason = "seconds";
      break;
    }
    if (r.is_zero()) {
      ++st.reductions_to_zero;
      continue;
    }
    r = r.normalized();
    if (r.is_constant()) return finish_unit();
    std::uint32_t nj = (std::uint32_t)basis.size();
    basis.push_back(std::move(r));
    for (std::uint32_t i = 0; i < nj; ++i) push_pair(i, nj);
  }

  if (st.budget_exhausted) {
    st.basis_size = basis.size();
    st.wall_seconds = seconds_since(t0);
    out.ok = false;
    // partial working basis: not a Groebner basis, but every element is in
    // the ideal, so callers may still use it for normal-form reduction
    out.polys = std::move(basis);
    return out;
  }

  // inter-reduce: drop elements whose leading monomial is divisible by
  // another's, then fully reduce each against the rest
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading().m;
      const Monomial& mj = basis[j].leading().m;
      if (mi.divisible_by(mj) && !(mi == mj && j > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = normal_form(minimal[i], others, ord);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare_monomials(a.leading().m, b.leading().m, ord) == Cmp::Less;
  });

  out.ok = true;
  out.polys = std::move(reduced);
  st.basis_size = out.polys.size();
  st.wall_seconds = seconds_since(t0);
  return out;
}

std::string membership_str(Membership m) {
  switch (m) {
    case Membership::Yes:
      return "yes";
    case Membership::No:
      return "no";
    default:
      return "unknown";
  }
}

MembershipResult ideal_membership(const Polynomial& f, const std::vector<Polynomial>& generators,
                                  const MonomialOrder& ord, const Budget& budget) {
  GroebnerBasis gb = buchberger(generators, ord, budget);
  MembershipResult res;
  res.stats = gb.stats;
  if (!gb.ok) return res;
  res.verdict = normal_form(f, gb.polys, ord).is_zero() ? Membership::Yes : Membership::No;
  return res;
}

namespace {

VarIndex rabinowitsch_var(const Polynomial& g, const std::vector<Polynomial>& generators) {
  RingPtr ctx = g.ctx();
  for (const Polynomial& p : generators)
    if (!ctx) ctx = p.ctx();
  auto z = ctx->find("z");
  if (!z) throw std::invalid_argument("radical membership needs an auxiliary variable named z");
  if (g.uses_var(*z)) throw std::invalid_argument("auxiliary variable z occurs in the test polynomial");
  for (const Polynomial& p : generators)
    if (p.uses_var(*z)) throw std::invalid_argument("auxiliary variable z occurs in a generator");
  return *z;
}

}  // namespace

MembershipResult radical_membership(const Polynomial& g, const std::vector<Polynomial>& generators,
                                    const Budget& budget) {
  MembershipResult res;
  if (g.is_zero()) {
    res.verdict = Membership::Yes;
    return res;
  }
  VarIndex z = rabinowitsch_var(g, generators);
  RingPtr ctx = g.ctx();
  MonomialOrder ord = ctx->order;
  Polynomial one_minus_zg =
      Polynomial::of_int(ctx, 1) - Polynomial::variable(ctx, z) * g;
  std::vector<Polynomial> gens = generators;
  gens.push_back(std::move(one_minus_zg));
  GroebnerBasis gb = buchberger(gens, ord, budget);
  res.stats = gb.stats;
  if (!gb.ok) return res;
  res.verdict = gb.is_unit() ? Membership::Yes : Membership::No;
  return res;
}

MembershipResult radical_membership_modulo(const Polynomial& g, const GroebnerBasis& base,
                                           const Budget& budget) {
  MembershipResult res;
  if (!base.ok) return res;  // Unknown: the base basis never finished
  Polynomial nf = normal_form(g, base.polys, base.order);
  if (nf.is_zero()) {
    res.verdict = Membership::Yes;
    return res;
  }
  VarIndex z = rabinowitsch_var(nf, base.polys);
  RingPtr ctx = nf.ctx();
  Polynomial one_minus_zg =
      Polynomial::of_int(ctx, 1) - Polynomial::variable(ctx, z) * nf;
  std::vector<Polynomial> gens = base.polys;
  gens.push_back(std::move(one_minus_zg));
  GroebnerBasis gb = buchberger(gens, base.order, budget, base.polys.size());
  res.stats = gb.stats;
  if (!gb.ok) return res;
  res.verdict = gb.is_unit() ? Membership::Yes : Membership::No;
  return res;
}

EliminationResult elimination(const std::vector<Polynomial>& generators,
                              const std::vector<VarIndex>& keep, const Budget& budget) {
  EliminationResult res;
  if (generators.empty()) {
    res.ok = true;
    return res;
  }
  RingPtr ctx = generators.front().ctx();
  std::vector<VarIndex> kept = keep;
  std::sort(kept.begin(), kept.end());
  std::vector<VarIndex> elim;
  for (VarIndex v = 0; v < ctx->nvars(); ++v)
    if (!std::binary_search(kept.begin(), kept.end(), v)) elim.push_back(v);
  MonomialOrder ord = MonomialOrder::block(elim);
  GroebnerBasis gb = buchberger(generators, ord, budget);
  res.stats = gb.stats;
  if (!gb.ok) return res;
  res.ok = true;
  for (const Polynomial& p : gb.polys)
    if (p.vars_within(kept)) res.kept.push_back(p);
  return res;
}

Polynomial substitute_var(const Polynomial& g, VarIndex v, const Polynomial& expr) {
  if (!g.uses_var(v)) return g;
  const RingPtr& ctx = g.ctx();
  const MonomialOrder& ord = g.order();
  std::vector<Polynomial> powers = {Polynomial::of_int(ctx, 1)};
  Polynomial acc = Polynomial::zero(ctx, ord);
  for (const Term& t : g.terms()) {
    std::uint32_t k = t.m.exponent(v);
    if (k == 0) {
      acc = acc + Polynomial::term(ctx, t.c, t.m);
      continue;
    }
    while (powers.size() <= k) powers.push_back(powers.back() * expr);
    Monomial rest;
    for (const auto& [u, e] : t.m.e)
      if (u != v) rest = rest.mul(Monomial::var(u, e));
    acc = acc + powers[k].with_order(ord).scaled(t.c) * Polynomial::term(ctx, Scalar::one(ctx->field), rest);
  }
  return acc;
}

std::vector<std::pair<VarIndex, Polynomial>> linear_substitutions(std::vector<Polynomial>& gens) {
  std::vector<std::pair<VarIndex, Polynomial>> subs;
  for (;;) {
    bool applied = false;
    for (std::size_t gi = 0; gi < gens.size() && !applied; ++gi) {
      const Polynomial& g = gens[gi];
      for (const Term& t : g.terms()) {
        if (t.m.deg != 1) continue;
        VarIndex v = t.m.e[0].first;
        bool elsewhere = false;
        for (const Term& u : g.terms())
          if (&u != &t && u.m.contains(v)) {
            elsewhere = true;
            break;
          }
        if (elsewhere) continue;
        Polynomial expr = (g - Polynomial::term(g.ctx(), t.c, t.m)).scaled(-(t.c.inv()));
        gens.erase(gens.begin() + (std::ptrdiff_t)gi);
        for (Polynomial& h : gens) h = substitute_var(h, v, expr);
        std::erase_if(gens, [](const Polynomial& h) { return h.is_zero(); });
        subs.emplace_back(v, std::move(expr));
        applied = true;
        break;
      }
    }
    if (!applied) return subs;
  }
}

}  // namespace irrep
