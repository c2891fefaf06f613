// Buchberger's algorithm, normal forms, ideal/radical membership, elimination.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irrep/polynomial.hpp"

namespace irrep {

// 0 means unlimited for every limit.
struct Budget {
  std::uint64_t max_spairs = 0;
  std::uint64_t max_polys = 0;
  double max_seconds = 0;

  static Budget unlimited() { return {}; }
  static Budget spairs(std::uint64_t n) { return {n, 0, 0}; }
  static Budget seconds(double s) { return {0, 0, s}; }
};

struct GroebnerStats {
  std::uint64_t spairs_processed = 0;
  std::uint64_t reductions_to_zero = 0;
  std::uint32_t max_degree = 0;  // max total degree reached while reducing
  std::uint64_t basis_size = 0;
  double wall_seconds = 0;
  bool budget_exhausted = false;
  std::string exhausted_reason;  // "spairs" | "polys" | "seconds"
};

// Reduced basis: every element monic, no term divisible by another element's
// leading monomial, sorted by leading monomial ascending. ok == false means
// the budget ran out; `polys` then holds the partial working basis, which is
// not a Groebner basis but still lies in the ideal, so normal-form reduction
// against it stays sound (a zero normal form proves ideal membership).
struct GroebnerBasis {
  bool ok = false;
  std::vector<Polynomial> polys;
  MonomialOrder order;
  GroebnerStats stats;

  bool is_unit() const {
    return ok && polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero();
  }
};

// Deterministic full reduction: divisors tried in basis order, leading term
// first. Result has no term divisible by any basis leading monomial.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord);

// gb_prefix > 0 asserts that the first gb_prefix generators already form a
// Groebner basis under `ord`; S-pairs inside the prefix are skipped.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& ord,
                         const Budget& budget, std::size_t gb_prefix = 0);

enum class Membership { Yes, No, Unknown };

std::string membership_str(Membership m);

struct MembershipResult {
  Membership verdict = Membership::Unknown;
  GroebnerStats stats;
};

MembershipResult ideal_membership(const Polynomial& f, const std::vector<Polynomial>& generators,
                                  const MonomialOrder& ord, const Budget& budget);

// Rabinowitsch trick: g is in the radical of <generators> iff the basis of
// generators + {1 - z*g} is {1}. The ring must contain a variable named "z"
// that occurs in neither g nor the generators.
MembershipResult radical_membership(const Polynomial& g, const std::vector<Polynomial>& generators,
                                    const Budget& budget);

// Same, but seeded with a precomputed basis of the base ideal: g is reduced
// to normal form first and the Buchberger run skips S-pairs internal to the
// known basis.
MembershipResult radical_membership_modulo(const Polynomial& g, const GroebnerBasis& base,
                                           const Budget& budget);

struct EliminationResult {
  bool ok = false;
  std::vector<Polynomial> kept;  // generators of the elimination ideal
  GroebnerStats stats;
};

EliminationResult elimination(const std::vector<Polynomial>& generators,
                              const std::vector<VarIndex>& keep, const Budget& budget);

// g with every occurrence of v replaced by expr (which must not contain v)
Polynomial substitute_var(const Polynomial& g, VarIndex v, const Polynomial& expr);

// Preprocessing: whenever some generator has a term c*v (v to the first
// power) and no other term of it mentions v, solve for v and substitute it
// away everywhere. The result generates the image of the ideal in the
// subring without the solved variables; points biject with the original
// variety, so (radical) membership of substituted polynomials is preserved.
// Returns the applied (variable, expression) list in application order;
// `gens` is rewritten in place with the solved generators dropped.
std::vector<std::pair<VarIndex, Polynomial>> linear_substitutions(std::vector<Polynomial>& gens);

}  // namespace irrep
