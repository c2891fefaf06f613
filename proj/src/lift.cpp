#include "irrep/lift.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

namespace irrep {

namespace {

// most significant variable of a nonconstant polynomial under lex
VarIndex top_var(const Polynomial& p) {
  VarIndex tv = std::numeric_limits<VarIndex>::max();
  for (const Term& t : p.terms())
    for (const auto& [v, k] : t.m.e) tv = std::min(tv, v);
  return tv;
}

// substitute every variable > v from `assign` and collect a univariate
// polynomial in v with tower coefficients
UPoly to_univariate(const Polynomial& p, VarIndex v, const std::vector<TowerElem>& assign,
                    const ExtensionTower& tw,
                    std::map<std::pair<VarIndex, std::uint32_t>, TowerElem>& pow_cache) {
  UPoly acc;
  for (const Term& t : p.terms()) {
    std::uint32_t k = 0;
    TowerElem coef = tw.from_scalar(t.c);
    for (const auto& [u, e] : t.m.e) {
      if (u == v) {
        k = e;
        continue;
      }
      if (u < v) throw std::logic_error("constraint involves an unsolved variable");
      auto it = pow_cache.find({u, e});
      if (it == pow_cache.end())
        it = pow_cache.emplace(std::make_pair(u, e), tw.pow(assign[u], e)).first;
      coef = tw.mul(coef, it->second);
    }
    if (acc.size() <= k) acc.resize(k + 1, tw.zero());
    acc[k] = tw.add(acc[k], coef);
  }
  return up_trim(tw, std::move(acc));
}

// divide out gcd(d, d') repeatedly; handles char-p polynomials in x^p whose
// coefficients are base-field scalars (Frobenius fixes them, so decimating
// exponents by p preserves the root set)
UPoly squarefree_part(const ExtensionTower& tw, UPoly d) {
  d = up_monic(tw, d);
  while (!d.empty() && up_deg(d) >= 1) {
    UPoly dd = up_derivative(tw, d);
    if (dd.empty()) {
      if (tw.field.rational()) throw std::logic_error("zero derivative in characteristic 0");
      std::uint64_t p = tw.field.p;
      UPoly g;
      for (std::size_t i = 0; i < d.size(); i += (std::size_t)p) {
        if (!tw.base_scalar(d[i], nullptr))
          throw std::logic_error("inseparable level polynomial over an extension");
        g.push_back(d[i]);
      }
      d = up_trim(tw, std::move(g));
      continue;
    }
    UPoly g = up_gcd_monic(tw, d, dd);
    if (up_deg(g) == 0) break;
    d = up_monic(tw, up_divmod(tw, d, g).first);
  }
  return d;
}

// all coefficients base-field scalars? extract them if so
bool base_coeffs(const ExtensionTower& tw, const UPoly& d, std::vector<Scalar>* out) {
  out->clear();
  out->reserve(d.size());
  for (const TowerElem& c : d) {
    Scalar s = Scalar::zero(tw.field);
    if (!tw.base_scalar(c, &s)) return false;
    out->push_back(s);
  }
  return true;
}

// divisors of |n|, ascending, abandoning the scan once `cap` candidates or
// trial divisors are spent (partial lists are fine: a missed rational root
// just opens a tower level instead)
std::vector<mpz_class> small_divisors(const mpz_class& n, unsigned cap) {
  std::vector<mpz_class> lo, hi;
  mpz_class a = abs(n);
  if (a == 0) return lo;
  unsigned trials = 0;
  for (mpz_class d = 1; d * d <= a && lo.size() < cap && trials < 100000; ++d, ++trials) {
    if (a % d == 0) {
      lo.push_back(d);
      mpz_class q = a / d;
      if (q != d) hi.push_back(q);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  if (lo.size() > cap) lo.resize(cap);
  return lo;
}

bool rational_root(const std::vector<Scalar>& c, Scalar* out) {
  // c is monic with rational coefficients; try a/b with a | numerator-content
  // constraints from the constant term and b | the lcm of denominators
  std::vector<mpq_class> q;
  q.reserve(c.size());
  for (const Scalar& s : c) q.push_back(s.rat());
  mpz_class den(1);
  for (const auto& x : q) den = lcm(den, x.get_den());
  std::vector<mpz_class> ints;
  ints.reserve(q.size());
  for (const auto& x : q) {
    mpq_class y = x * den;
    y.canonicalize();
    ints.push_back(y.get_num());
  }
  auto eval = [&](const mpq_class& r) {
    mpq_class acc(0);
    for (std::size_t i = ints.size(); i > 0; --i) acc = acc * r + mpq_class(ints[i - 1]);
    return acc == 0;
  };
  if (ints.front() == 0) {
    *out = Scalar::zero(c.front().field());
    return true;
  }
  const unsigned kCap = 256;
  std::vector<mpz_class> as = small_divisors(ints.front(), kCap);
  std::vector<mpz_class> bs = small_divisors(den, kCap);
  for (const mpz_class& b : bs) {
    for (const mpz_class& a : as) {
      if (gcd(a, b) != 1) continue;
      mpq_class r(a, b);
      r.canonicalize();
      if (eval(r)) {
        *out = Scalar::rational(r);
        return true;
      }
      if (eval(-r)) {
        *out = Scalar::rational(-r);
        return true;
      }
    }
  }
  return false;
}

bool gf_root(const std::vector<Scalar>& c, const FieldSpec& f, Scalar* out) {
  if (f.p > 65536) return false;  // full residue scan only for small fields
  for (std::uint64_t r = 0; r < f.p; ++r) {
    Scalar x = Scalar::of_int((long)r, f);
    Scalar acc = Scalar::zero(f);
    for (std::size_t i = c.size(); i > 0; --i) acc = acc * x + c[i - 1];
    if (acc.is_zero()) {
      *out = x;
      return true;
    }
  }
  return false;
}

}  // namespace

LiftResult lift_point(const std::vector<Polynomial>& generators, const Budget& budget) {
  if (generators.empty()) throw std::invalid_argument("lift_point needs at least one generator");
  LiftResult res;
  RingPtr ctx = generators.front().ctx();

  GroebnerBasis g1 = buchberger(generators, MonomialOrder::grevlex(), budget);
  res.grevlex_stats = g1.stats;
  if (!g1.ok) return res;
  if (g1.is_unit()) {
    res.status = LiftStatus::Inconsistent;
    return res;
  }
  GroebnerBasis g2 = buchberger(g1.polys, MonomialOrder::lex(), budget);
  res.lex_stats = g2.stats;
  if (!g2.ok) return res;
  if (g2.is_unit()) {
    res.status = LiftStatus::Inconsistent;
    return res;
  }

  const std::size_t nv = ctx->nvars();
  std::vector<bool> pure(nv, false);
  for (const Polynomial& p : g2.polys) {
    const Monomial& lm = p.leading().m;
    if (lm.e.size() == 1) pure[lm.e[0].first] = true;
  }
  for (VarIndex v = 0; v < nv; ++v)
    if (!pure[v]) res.free_vars.push_back(v);
  if (!res.free_vars.empty()) {
    res.status = LiftStatus::PositiveDimensional;
    return res;
  }

  // back-substitute from the least significant variable upward
  std::vector<std::vector<const Polynomial*>> by_top(nv);
  for (const Polynomial& p : g2.polys) by_top[top_var(p)].push_back(&p);

  ExtensionTower tw(ctx->field);
  std::vector<TowerElem> assign(nv);
  int splits_left = 1000;
  std::size_t level_serial = 0;

  for (std::size_t step = nv; step > 0;) {
    VarIndex v = (VarIndex)(step - 1);
    try {
      std::map<std::pair<VarIndex, std::uint32_t>, TowerElem> pow_cache;
      UPoly d;
      for (const Polynomial* p : by_top[v])
        d = up_gcd_monic(tw, std::move(d), to_univariate(*p, v, assign, tw, pow_cache));
      if (d.empty()) throw std::logic_error("variable without constraints after zero-dim check");
      if (up_deg(d) == 0) {
        res.status = LiftStatus::Inconsistent;  // no common root on this branch
        return res;
      }
      d = squarefree_part(tw, d);
      if (up_deg(d) == 1) {
        assign[v] = tw.neg(d[0]);
      } else {
        std::vector<Scalar> consts;
        Scalar root = Scalar::zero(ctx->field);
        bool found = base_coeffs(tw, d, &consts) &&
                     (ctx->field.rational() ? rational_root(consts, &root)
                                            : gf_root(consts, ctx->field, &root));
        if (found) {
          assign[v] = tw.from_scalar(root);
        } else {
          ExtensionTower::Level lv;
          lv.name = "t" + std::to_string(++level_serial);
          lv.minpoly = d;
          tw.levels.push_back(std::move(lv));
          for (VarIndex u = v + 1; u < nv; ++u) assign[u] = tw.raise(std::move(assign[u]));
          assign[v] = tw.gen(tw.height());
        }
      }
      --step;
    } catch (SplitRequest& sr) {
      if (--splits_left < 0) throw std::logic_error("tower refinement did not terminate");
      res.split_log.push_back(tw.levels[sr.level - 1].name + " refined while solving " +
                              ctx->name(v));
      tw.refine(sr);
      for (VarIndex u = v + 1; u < nv; ++u) assign[u] = tw.reduce(assign[u]);
      // redo the current variable on the refined branch
    }
  }

  TowerOps ops{&tw};
  for (const Polynomial& g : generators) {
    TowerElem val = evaluate(g, assign, ops);
    if (!tw.is_zero(val)) throw std::logic_error("lifted point fails a generator");
  }
  res.status = LiftStatus::Point;
  res.tower = std::move(tw);
  res.assignment = std::move(assign);
  return res;
}

}  // namespace irrep
