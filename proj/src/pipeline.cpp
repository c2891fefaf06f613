#include "irrep/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

namespace irrep {

std::string decision_str(Decision d) {
  switch (d) {
    case Decision::Exists: return "Exists";
    case Decision::NotExists: return "NotExists";
    case Decision::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& f) {
  if (f.rational()) {
    std::uniform_int_distribution<long> d(-20, 20);
    return Scalar::of_int(d(rng), f);
  }
  std::uniform_int_distribution<std::uint64_t> d(0, f.p - 1);
  return Scalar::residue(d(rng), f.p);
}

void reduce_point(const ExtensionTower& tw, std::vector<Mat<TowerElem>>& mats) {
  for (auto& m : mats)
    for (auto& e : m.a) e = tw.reduce(e);
}

}  // namespace

DecisionReport decide(const Presentation& pres, const DecideOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  DecisionReport rep;
  rep.field = pres.field.str();
  rep.strategy = strategy_str(opt.strategy);
  rep.n = pres.n;
  rep.hints = pres.hints;

  RingPtr ctx = representation_ring(pres.field, pres.n, (std::uint32_t)pres.gens.size());
  RelIdeal rel = rel_ideal(pres, ctx);
  // relations like A - X^2 pin whole matrices of variables linearly; solving
  // them out first keeps the basis computation in the surviving variables
  std::vector<Polynomial> relgens = rel.gens;
  std::vector<std::pair<VarIndex, Polynomial>> subs = linear_substitutions(relgens);
  if (!subs.empty())
    rep.notes.push_back(std::to_string(subs.size()) +
                        " linearly determined variable(s) substituted away");
  auto apply_subs = [&](Polynomial g) {
    for (const auto& [v, expr] : subs) g = substitute_var(g, v, expr);
    return g;
  };
  GroebnerBasis relgb = buchberger(relgens, ctx->order, opt.budget);
  rep.rel_basis_stats = relgb.stats;
  if (!relgb.ok)
    // keep going with the partial basis: a candidate whose normal form
    // vanishes is in the ideal, hence in the radical, and the others get a
    // fresh from-scratch membership run each
    rep.notes.push_back("relation ideal basis hit the budget (" + relgb.stats.exhausted_reason +
                        "); continuing with the partial basis");
  // with a complete basis, membership runs are seeded with it; otherwise a
  // zero normal form against the partial basis already settles Yes and only
  // the rest pays for a full Rabinowitsch run
  auto test_candidate = [&](const Polynomial& g) -> MembershipResult {
    Polynomial gs = apply_subs(g);
    if (relgb.ok) return radical_membership_modulo(gs, relgb, opt.budget);
    Polynomial gnf = normal_form(gs, relgb.polys, ctx->order);
    if (gnf.is_zero()) return {Membership::Yes, {}};
    return radical_membership(gnf, relgens, opt.budget);
  };
  if (relgb.is_unit()) {
    // empty relation variety: every candidate lies in the radical trivially
    rep.status = Decision::NotExists;
    rep.notes.push_back("relation ideal is the unit ideal; no n-dimensional representation exists");
    rep.wall_seconds = elapsed(t0);
    return rep;
  }

  if (pres.n == 1) {
    // a 1-dimensional representation is irreducible exactly when it exists,
    // so test the constant 1 = trace of the empty word
    Polynomial one = Polynomial::of_int(ctx, 1);
    MembershipResult mr = test_candidate(one);
    rep.enumerated = rep.tested = 1;
    rep.candidates.push_back({"tr[M1]", mr.verdict, mr.stats});
    if (mr.verdict == Membership::No) {
      rep.status = Decision::Exists;
      rep.witness_descriptor = "tr[M1]";
      rep.witness = one;
    } else if (mr.verdict == Membership::Yes) {
      rep.status = Decision::NotExists;
    } else {
      rep.status = Decision::Unknown;
      rep.notes.push_back("candidate membership hit the budget");
    }
    rep.wall_seconds = elapsed(t0);
    return rep;
  }

  WordBasisSet words = word_set(pres, pres.n, opt.ch_prune);
  for (const auto& line : words.pruning_log) rep.notes.push_back(line);
  CandidateStream stream(opt.strategy, words, ctx, &relgb, opt.det_cap);

  bool unknown_seen = false;
  for (;;) {
    double remain = 0;
    if (opt.budget.max_seconds > 0) {
      remain = opt.budget.max_seconds - elapsed(t0);
      if (remain <= 0) {
        unknown_seen = true;
        rep.notes.push_back("decision wall-clock budget exhausted; stream not finished");
        break;
      }
    }
    std::optional<Candidate> c = stream.next(remain);
    if (!c) {
      if (stream.timed_out()) {
        unknown_seen = true;
        rep.notes.push_back("decision wall-clock budget exhausted; stream not finished");
      }
      break;
    }
    MembershipResult mr = test_candidate(c->poly);
    rep.candidates.push_back({c->descriptor, mr.verdict, mr.stats});
    ++rep.tested;
    if (mr.verdict == Membership::No) {
      rep.status = Decision::Exists;
      rep.witness_descriptor = c->descriptor;
      rep.witness = c->poly;
      break;
    }
    if (mr.verdict == Membership::Unknown) {
      unknown_seen = true;
      rep.notes.push_back("candidate " + c->descriptor + " hit the budget");
    }
  }
  rep.enumerated = stream.total_enumerated();
  rep.skipped_zero = stream.skipped_zero();
  rep.skipped_dedup = stream.skipped_dedup();
  if (rep.status != Decision::Exists)
    rep.status = unknown_seen ? Decision::Unknown : Decision::NotExists;
  rep.wall_seconds = elapsed(t0);
  return rep;
}

ConstructResult construct(const Presentation& pres, const Polynomial& y,
                          const ConstructOptions& opt,
                          const std::optional<std::string>& witness_descriptor) {
  ConstructResult out;
  out.seed = opt.seed;
  const RingPtr& ctx = y.ctx();
  RelIdeal rel = rel_ideal(pres, ctx);

  std::vector<Polynomial> sys = rel.gens;
  Polynomial z = Polynomial::variable(ctx, ctx->index("z"));
  sys.push_back(y * z - Polynomial::of_int(ctx, 1));

  std::mt19937_64 rng(opt.seed);
  const std::uint32_t n = pres.n;
  const std::size_t s = pres.gens.size();

  // the solution variety is usually positive-dimensional (conjugates of one
  // representation form an orbit), so cut it down by pinning one reported
  // free variable at a time; a pin that keeps missing the variety is likely
  // algebraically dependent on earlier pins and gets demoted
  struct Pin {
    VarIndex v;
    Polynomial eq;
  };
  std::vector<Pin> pins;
  std::vector<VarIndex> demoted;
  int misses = 0;

  auto pin_eq = [&](VarIndex v) {
    return Polynomial::variable(ctx, v) -
           Polynomial::constant(ctx, random_scalar(rng, pres.field));
  };
  auto pinned_or_demoted = [&](VarIndex v) {
    for (const auto& p : pins)
      if (p.v == v) return true;
    return std::find(demoted.begin(), demoted.end(), v) != demoted.end();
  };

  for (out.attempts = 1; out.attempts <= opt.max_retries; ++out.attempts) {
    std::vector<Polynomial> gens = sys;
    for (const auto& p : pins) gens.push_back(p.eq);
    LiftResult lr = lift_point(gens, opt.budget);
    out.grevlex_stats = lr.grevlex_stats;
    out.lex_stats = lr.lex_stats;
    for (const auto& line : lr.split_log) out.notes.push_back(line);

    if (lr.status == LiftStatus::Unknown) {
      out.status = ConstructStatus::Unknown;
      out.notes.push_back("lift hit the budget");
      return out;
    }
    if (lr.status == LiftStatus::Point) {
      RepresentationPoint pt;
      pt.n = n;
      pt.field = pres.field;
      pt.gens = pres.gens;
      pt.tower = lr.tower;
      for (std::uint32_t l = 1; l <= s; ++l) {
        Mat<TowerElem> m(n, lr.tower.zero());
        for (std::uint32_t i = 0; i < n; ++i)
          for (std::uint32_t j = 0; j < n; ++j)
            m.at(i, j) = lr.assignment.at(ctx->index(genvar_name(i + 1, j + 1, l)));
        pt.mats.push_back(std::move(m));
      }
      pt.witness_descriptor = witness_descriptor;
      TowerOps tops{&pt.tower};
      pt.witness_value = evaluate<TowerOps>(y, lr.assignment, tops);
      out.point = std::move(pt);
      out.status = ConstructStatus::Ok;
      if (!pins.empty())
        out.notes.push_back(std::to_string(pins.size()) + " free variable(s) pinned to random values");
      return out;
    }
    if (lr.status == LiftStatus::PositiveDimensional) {
      misses = 0;
      VarIndex pick = 0;
      bool found = false;
      for (VarIndex v : lr.free_vars)
        if (!pinned_or_demoted(v)) {
          pick = v;
          found = true;
          break;
        }
      if (!found) {
        // every candidate was demoted; take the first reported one anyway
        demoted.clear();
        if (lr.free_vars.empty()) {
          out.status = ConstructStatus::Failed;
          out.notes.push_back("positive-dimensional but no free variable reported");
          return out;
        }
        pick = lr.free_vars.front();
      }
      pins.push_back({pick, pin_eq(pick)});
      out.notes.push_back("attempt " + std::to_string(out.attempts) + ": pinned " +
                          ctx->name(pick));
      continue;
    }
    // Inconsistent: a genuine contradiction only when nothing was pinned
    if (pins.empty()) {
      out.status = ConstructStatus::Failed;
      out.notes.push_back("system is inconsistent: the witness vanishes on the whole relation variety");
      return out;
    }
    if (++misses > 4) {
      demoted.push_back(pins.back().v);
      out.notes.push_back("attempt " + std::to_string(out.attempts) + ": demoted " +
                          ctx->name(pins.back().v));
      pins.pop_back();
      misses = 0;
    } else {
      pins.back().eq = pin_eq(pins.back().v);
    }
  }
  out.attempts = opt.max_retries;
  out.status = ConstructStatus::Failed;
  out.notes.push_back("specialization retries exhausted");
  return out;
}

VerificationReport verify(const Presentation& pres, const RepresentationPoint& point,
                          bool ch_prune) {
  VerificationReport rep;
  const std::uint32_t n = point.n;
  if (pres.n != n) throw std::invalid_argument("point dimension does not match the presentation");
  if (point.mats.size() != pres.gens.size())
    throw std::invalid_argument("point has the wrong number of matrices");
  for (const auto& m : point.mats)
    if (m.n != n) throw std::invalid_argument("matrix dimension mismatch");
  if (point.field.p != pres.field.p)
    throw std::invalid_argument("point field does not match the presentation");
  rep.full_rank = n * n;

  ExtensionTower tw = point.tower;
  std::vector<Mat<TowerElem>> mats = point.mats;
  TowerOps tops{&tw};

  // relations: pure ring arithmetic, no inversions, so no refinement needed;
  // an entry that vanishes here vanishes on every branch of the tower
  rep.relations_hold = true;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    Mat<TowerElem> val = evaluate_nc<TowerOps>(pres.relations[r], mats, tops);
    for (std::uint32_t i = 0; i < n && rep.relations_hold; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (!tw.is_zero(val.at(i, j))) {
          rep.relations_hold = false;
          rep.failed_relation = r;
          rep.failed_entry = {i + 1, j + 1};
          rep.failed_value = tw.str(val.at(i, j));
          break;
        }
    if (!rep.relations_hold) break;
  }

  // rank and witness evaluation can hit zero divisors; refine and restart
  std::optional<WitnessDescriptor> wd;
  if (point.witness_descriptor) {
    WordBasisSet words = word_set(pres, n, ch_prune);
    wd = parse_witness(*point.witness_descriptor, words);
    if (!wd) {
      rep.notes.push_back("unrecognized witness descriptor: " + *point.witness_descriptor);
    } else {
      rep.witness_descriptor = point.witness_descriptor;
      // the descriptor indexes this word set; keep it alive for evaluation
      std::size_t splits = 0;
      for (;;) {
        try {
          TowerElem v = evaluate_witness<TowerOps>(*wd, words, mats, tops);
          rep.witness_value = tw.str(v);
          rep.witness_invertible = false;
          if (!tw.is_zero(v)) {
            try {
              tops.inv(v);
              rep.witness_invertible = true;
            } catch (const DivideByZero&) {
            }
          }
          break;
        } catch (const SplitRequest& sr) {
          if (++splits > 64) throw std::logic_error("refinement did not terminate");
          rep.notes.push_back("level " + std::to_string(sr.level) +
                              " refined during witness evaluation");
          tw.refine(sr);
          reduce_point(tw, mats);
        }
      }
    }
  }

  std::size_t splits = 0;
  for (;;) {
    try {
      rep.rank = span_rank<TowerOps>(mats, length_bound(n), tops);
      break;
    } catch (const SplitRequest& sr) {
      if (++splits > 64) throw std::logic_error("refinement did not terminate");
      rep.notes.push_back("level " + std::to_string(sr.level) + " refined during rank computation");
      tw.refine(sr);
      reduce_point(tw, mats);
    }
  }
  rep.irreducible = rep.rank == rep.full_rank;
  if (splits > 0)
    rep.notes.push_back("rank refers to one branch of the refined tower");
  return rep;
}

bool certify_by_point(const Polynomial& y, const RelIdeal& rel, const RepresentationPoint& point) {
  const RingPtr& ctx = y.ctx();
  ExtensionTower tw = point.tower;
  TowerOps tops{&tw};
  std::vector<TowerElem> asg(ctx->nvars(), tw.zero());
  const std::uint32_t n = point.n;
  for (std::size_t l = 0; l < point.mats.size(); ++l)
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        auto idx = ctx->find(genvar_name(i + 1, j + 1, (std::uint32_t)l + 1));
        if (!idx) return false;
        asg[*idx] = point.mats[l].at(i, j);
      }
  for (const auto& g : rel.gens)
    if (!tw.is_zero(evaluate<TowerOps>(g, asg, tops))) return false;
  TowerElem v = evaluate<TowerOps>(y, asg, tops);
  if (tw.is_zero(v)) return false;
  try {
    tops.inv(v);
  } catch (const DivideByZero&) {
    return false;
  } catch (const SplitRequest&) {
    return false;  // a zero divisor is not a unit in the given tower
  }
  return true;
}

}  // namespace irrep
