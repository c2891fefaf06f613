// Towers of simple algebraic extensions with dynamic evaluation: level
// polynomials are monic and squarefree but not necessarily irreducible, and
// inverting a zero divisor raises SplitRequest so the caller can refine the
// offending level and redo its computation on one branch.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irrep/polynomial.hpp"

namespace irrep {

// Height 0 holds a base-field scalar. Height h > 0 holds dense coefficients
// (ascending degree, trailing zeros trimmed, empty = zero) over height h-1.
struct TowerElem {
  int h = 0;
  Scalar s;
  std::vector<TowerElem> c;
};

struct SplitRequest {
  std::size_t level;              // 1-based level whose polynomial factors
  std::vector<TowerElem> factor;  // proper monic divisor, coeffs at height level-1
};

class ExtensionTower {
 public:
  struct Level {
    std::string name;
    std::vector<TowerElem> minpoly;  // monic, coeffs at height level-1, size deg+1
  };

  FieldSpec field;
  std::vector<Level> levels;

  ExtensionTower() = default;
  explicit ExtensionTower(FieldSpec f) : field(f) {}

  std::size_t height() const { return levels.size(); }
  std::size_t level_degree(std::size_t level) const {
    return levels.at(level - 1).minpoly.size() - 1;
  }
  std::size_t residue_dimension() const;  // product of level degrees

  TowerElem zero() const;
  TowerElem one() const;
  TowerElem from_scalar(const Scalar& v) const;
  TowerElem from_int(long n) const;
  TowerElem gen(std::size_t level) const;  // the residue of level's variable

  // replace a level's polynomial by a proper monic divisor; all previously
  // created elements must be passed through reduce() afterwards
  void refine(const SplitRequest& split);

  TowerElem add(const TowerElem& a, const TowerElem& b) const;
  TowerElem sub(const TowerElem& a, const TowerElem& b) const;
  TowerElem mul(const TowerElem& a, const TowerElem& b) const;
  TowerElem neg(const TowerElem& a) const;
  TowerElem inv(const TowerElem& a) const;  // throws SplitRequest on zero divisors
  TowerElem pow(const TowerElem& a, std::uint64_t e) const;
  bool is_zero(const TowerElem& a) const;
  bool equal(const TowerElem& a, const TowerElem& b) const;

  // re-normalize an element created before a refine()
  TowerElem reduce(const TowerElem& a) const;

  // wrap an element created before levels were appended up to current height
  TowerElem raise(TowerElem a) const;

  // if a is a constant from the base field, extract it
  bool base_scalar(const TowerElem& a, Scalar* out) const;

  std::string str(const TowerElem& a) const;
  std::string level_poly_str(std::size_t level) const;
};

struct TowerOps {
  const ExtensionTower* t;
  using Elem = TowerElem;
  TowerElem zero() const { return t->zero(); }
  TowerElem one() const { return t->one(); }
  TowerElem from_scalar(const Scalar& c) const { return t->from_scalar(c); }
  TowerElem add(const TowerElem& a, const TowerElem& b) const { return t->add(a, b); }
  TowerElem sub(const TowerElem& a, const TowerElem& b) const { return t->sub(a, b); }
  TowerElem mul(const TowerElem& a, const TowerElem& b) const { return t->mul(a, b); }
  TowerElem neg(const TowerElem& a) const { return t->neg(a); }
  TowerElem inv(const TowerElem& a) const { return t->inv(a); }
  bool is_zero(const TowerElem& a) const { return t->is_zero(a); }
};

// Univariate polynomials over a tower (dense, ascending degree), used for the
// point-lifting back-substitution. Coefficients live at full tower height.
using UPoly = std::vector<TowerElem>;

UPoly up_trim(const ExtensionTower& t, UPoly p);
std::size_t up_deg(const UPoly& p);  // pre: trimmed, nonzero
UPoly up_add(const ExtensionTower& t, const UPoly& a, const UPoly& b);
UPoly up_scale(const ExtensionTower& t, const UPoly& a, const TowerElem& c);
UPoly up_mul(const ExtensionTower& t, const UPoly& a, const UPoly& b);
// remainder of a mod b; inverts b's leading coefficient (may split)
UPoly up_rem(const ExtensionTower& t, UPoly a, const UPoly& b);
// quotient and remainder; inverts b's leading coefficient (may split)
std::pair<UPoly, UPoly> up_divmod(const ExtensionTower& t, UPoly a, const UPoly& b);
UPoly up_monic(const ExtensionTower& t, const UPoly& a);
UPoly up_gcd_monic(const ExtensionTower& t, UPoly a, UPoly b);
UPoly up_derivative(const ExtensionTower& t, const UPoly& a);
TowerElem up_eval(const ExtensionTower& t, const UPoly& p, const TowerElem& x);
std::string up_str(const ExtensionTower& t, const UPoly& p, const std::string& var);

}  // namespace irrep
