// Exact field elements: arbitrary-precision rationals or residues mod a prime.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace irrep {

// Coefficient field: the rationals (p == 0) or GF(p) for prime p.
struct FieldSpec {
  std::uint64_t p = 0;

  bool rational() const { return p == 0; }
  bool operator==(const FieldSpec&) const = default;
  std::string str() const { return p == 0 ? "QQ" : "GF(" + std::to_string(p) + ")"; }

  static FieldSpec QQ() { return FieldSpec{0}; }
  static FieldSpec GF(std::uint64_t p) { return FieldSpec{p}; }
};

bool is_prime_u64(std::uint64_t n);

struct FieldMismatch : std::logic_error {
  FieldMismatch() : std::logic_error("scalar arithmetic across different fields") {}
};

struct DivideByZero : std::runtime_error {
  DivideByZero() : std::runtime_error("division by zero") {}
};

class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f) { return of_int(0, f); }
  static Scalar one(const FieldSpec& f) { return of_int(1, f); }
  static Scalar of_int(long n, const FieldSpec& f);
  static Scalar rational(mpq_class q);
  static Scalar residue(std::uint64_t v, std::uint64_t p);
  // a/b reduced into f; over GF(p) the denominator must be a unit
  static Scalar from_mpq(const mpq_class& q, const FieldSpec& f);

  bool is_rational_form() const { return std::holds_alternative<mpq_class>(v_); }
  FieldSpec field() const;
  const mpq_class& rat() const { return std::get<mpq_class>(v_); }
  std::uint64_t res_value() const { return std::get<Res>(v_).v; }

  bool is_zero() const;
  bool is_one() const;
  bool is_negative() const;  // rationals only; residues are never negative

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(std::uint64_t e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  struct Res {
    std::uint64_t v, p;
    bool operator==(const Res&) const = default;
  };
  std::variant<mpq_class, Res> v_;

  static void check_same(const Scalar& a, const Scalar& b);
};

}  // namespace irrep
