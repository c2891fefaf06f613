// Sparse exact multivariate polynomials over a RingContext.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irrep/ring.hpp"

namespace irrep {

struct Term {
  Scalar c;
  Monomial m;
};

// Terms kept strictly descending under the polynomial's order; no zero
// coefficients; empty term list is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero(RingPtr ctx);
  static Polynomial zero(RingPtr ctx, MonomialOrder ord);
  static Polynomial constant(RingPtr ctx, const Scalar& c);
  static Polynomial of_int(RingPtr ctx, long n);
  static Polynomial variable(RingPtr ctx, VarIndex v);
  static Polynomial term(RingPtr ctx, const Scalar& c, const Monomial& m);
  // sorts and combines; drops zeros
  static Polynomial from_terms(RingPtr ctx, MonomialOrder ord, std::vector<Term> ts);
  // trusts ts to be strictly descending in ord with no zero coefficients
  static Polynomial from_sorted(RingPtr ctx, MonomialOrder ord, std::vector<Term> ts);

  const RingPtr& ctx() const { return ctx_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Term>& terms() const { return ts_; }
  bool is_zero() const { return ts_.empty(); }
  bool is_constant() const { return ts_.empty() || (ts_.size() == 1 && ts_[0].m.is_one()); }
  std::uint32_t degree() const;  // 0 for the zero polynomial
  const Term& leading() const;   // pre: nonzero
  Polynomial with_order(const MonomialOrder& o) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial scaled(const Scalar& c) const;
  // this + c * m * g, merged in one pass
  Polynomial add_scaled(const Polynomial& g, const Scalar& c, const Monomial& m) const;
  Polynomial monic() const;  // pre: nonzero
  // Over QQ: divide by the content (gcd of numerators over lcm of denominators)
  // and normalize the leading sign to +. Over GF(p): returns monic.
  Polynomial normalized() const;

  bool uses_var(VarIndex v) const;
  bool vars_within(const std::vector<VarIndex>& allowed) const;  // allowed sorted

  std::string str() const;

 private:
  RingPtr ctx_;
  MonomialOrder ord_;
  std::vector<Term> ts_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
std::pair<Scalar, Monomial> leading_term(const Polynomial& f, const MonomialOrder& o);

// Ring operation bundles so matrix/evaluation code can run over the base
// field, the polynomial ring, or an extension tower with one implementation.
struct ScalarOps {
  FieldSpec f;
  using Elem = Scalar;
  Scalar zero() const { return Scalar::zero(f); }
  Scalar one() const { return Scalar::one(f); }
  Scalar from_scalar(const Scalar& c) const { return c; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar inv(const Scalar& a) const { return a.inv(); }
  bool is_zero(const Scalar& a) const { return a.is_zero(); }
};

struct PolyOps {
  RingPtr ctx;
  using Elem = Polynomial;
  Polynomial zero() const { return Polynomial::zero(ctx); }
  Polynomial one() const { return Polynomial::of_int(ctx, 1); }
  Polynomial from_scalar(const Scalar& c) const { return Polynomial::constant(ctx, c); }
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
  Polynomial sub(const Polynomial& a, const Polynomial& b) const { return a - b; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }
  Polynomial neg(const Polynomial& a) const { return -a; }
  bool is_zero(const Polynomial& a) const { return a.is_zero(); }
};

// Exact substitution; the assignment must cover every variable of f.
template <class Ops>
typename Ops::Elem evaluate(const Polynomial& f, const std::vector<typename Ops::Elem>& point,
                            const Ops& ops) {
  auto acc = ops.zero();
  for (const Term& t : f.terms()) {
    auto val = ops.from_scalar(t.c);
    for (const auto& [v, k] : t.m.e) {
      if (v >= point.size()) throw std::out_of_range("unassigned variable in evaluate");
      auto p = point[v];
      std::uint32_t e = k;
      while (true) {  // square and multiply
        if (e & 1) val = ops.mul(val, p);
        e >>= 1;
        if (!e) break;
        p = ops.mul(p, p);
      }
    }
    acc = ops.add(acc, val);
  }
  return acc;
}

Scalar evaluate(const Polynomial& f, const std::vector<Scalar>& point);

}  // namespace irrep
