#include "irrep/scalar.hpp"

namespace irrep {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DivideByZero();
  // extended Euclid; p prime so gcd is 1
  std::int64_t t = 0, nt = 1;
  std::uint64_t r = p, nr = a;
  while (nr != 0) {
    std::uint64_t q = r / nr;
    std::int64_t tmp = t - static_cast<std::int64_t>(q) * nt;
    t = nt;
    nt = tmp;
    std::uint64_t rr = r - q * nr;
    r = nr;
    nr = rr;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin base set for 64-bit integers
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Scalar Scalar::of_int(long n, const FieldSpec& f) {
  if (f.rational()) return rational(mpq_class(n));
  long long m = n % static_cast<long long>(f.p);
  if (m < 0) m += static_cast<long long>(f.p);
  return residue(static_cast<std::uint64_t>(m), f.p);
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  Scalar s;
  s.v_ = std::move(q);
  return s;
}

Scalar Scalar::residue(std::uint64_t v, std::uint64_t p) {
  Scalar s;
  s.v_ = Res{v % p, p};
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& q, const FieldSpec& f) {
  if (f.rational()) return rational(q);
  mpz_class p((unsigned long)f.p);
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  Scalar a = residue(num.get_ui(), f.p);
  Scalar b = residue(den.get_ui(), f.p);
  return a / b;  // throws DivideByZero when the denominator reduces to 0
}

FieldSpec Scalar::field() const {
  if (is_rational_form()) return FieldSpec::QQ();
  return FieldSpec::GF(std::get<Res>(v_).p);
}

bool Scalar::is_zero() const {
  if (is_rational_form()) return sgn(rat()) == 0;
  return std::get<Res>(v_).v == 0;
}

bool Scalar::is_one() const {
  if (is_rational_form()) return rat() == 1;
  return std::get<Res>(v_).v == 1;
}

bool Scalar::is_negative() const {
  if (is_rational_form()) return sgn(rat()) < 0;
  return false;
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
  if (a.is_rational_form() != b.is_rational_form()) throw FieldMismatch();
  if (!a.is_rational_form() && std::get<Res>(a.v_).p != std::get<Res>(b.v_).p) throw FieldMismatch();
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(*this, o);
  if (is_rational_form()) return rational(rat() + o.rat());
  const Res& a = std::get<Res>(v_);
  const Res& b = std::get<Res>(o.v_);
  std::uint64_t s = a.v + b.v;
  if (s >= a.p) s -= a.p;
  return residue(s, a.p);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(*this, o);
  if (is_rational_form()) return rational(rat() - o.rat());
  const Res& a = std::get<Res>(v_);
  const Res& b = std::get<Res>(o.v_);
  std::uint64_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
  return residue(s, a.p);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(*this, o);
  if (is_rational_form()) return rational(rat() * o.rat());
  const Res& a = std::get<Res>(v_);
  const Res& b = std::get<Res>(o.v_);
  return residue(mulmod(a.v, b.v, a.p), a.p);
}

Scalar Scalar::operator-() const {
  if (is_rational_form()) return rational(-rat());
  const Res& a = std::get<Res>(v_);
  return residue(a.v == 0 ? 0 : a.p - a.v, a.p);
}

Scalar Scalar::inv() const {
  if (is_rational_form()) {
    if (is_zero()) throw DivideByZero();
    return rational(1 / rat());
  }
  const Res& a = std::get<Res>(v_);
  return residue(invmod(a.v, a.p), a.p);
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (!is_rational_form()) {
    const Res& a = std::get<Res>(v_);
    return residue(powmod(a.v, e, a.p), a.p);
  }
  mpq_class r(1);
  mpq_class b = rat();
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return rational(r);
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational_form() != o.is_rational_form()) return false;
  if (is_rational_form()) return rat() == o.rat();
  return std::get<Res>(v_) == std::get<Res>(o.v_);
}

std::string Scalar::str() const {
  if (is_rational_form()) return rat().get_str();
  return std::to_string(std::get<Res>(v_).v);
}

}  // namespace irrep
