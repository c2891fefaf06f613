#include "irrep/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace irrep {

namespace {

void check_ctx(const Polynomial& a, const Polynomial& b) {
  if (a.ctx() && b.ctx() && a.ctx() != b.ctx())
    throw std::invalid_argument("polynomials from different rings");
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ctx) {
  MonomialOrder o = ctx->order;
  return zero(std::move(ctx), std::move(o));
}

Polynomial Polynomial::zero(RingPtr ctx, MonomialOrder ord) {
  Polynomial p;
  p.ctx_ = std::move(ctx);
  p.ord_ = std::move(ord);
  return p;
}

Polynomial Polynomial::constant(RingPtr ctx, const Scalar& c) {
  Polynomial p = zero(std::move(ctx));
  if (!c.is_zero()) p.ts_.push_back({c, Monomial::one()});
  return p;
}

Polynomial Polynomial::of_int(RingPtr ctx, long n) {
  Scalar c = Scalar::of_int(n, ctx->field);
  return constant(std::move(ctx), c);
}

Polynomial Polynomial::variable(RingPtr ctx, VarIndex v) {
  Scalar c = Scalar::one(ctx->field);
  Polynomial p = zero(std::move(ctx));
  p.ts_.push_back({c, Monomial::var(v)});
  return p;
}

Polynomial Polynomial::term(RingPtr ctx, const Scalar& c, const Monomial& m) {
  Polynomial p = zero(std::move(ctx));
  if (!c.is_zero()) p.ts_.push_back({c, m});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ctx, MonomialOrder ord, std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
    return compare_monomials(a.m, b.m, ord) == Cmp::Greater;
  });
  Polynomial p = zero(std::move(ctx), std::move(ord));
  for (auto& t : ts) {
    if (t.c.is_zero()) continue;
    if (!p.ts_.empty() && p.ts_.back().m == t.m) {
      p.ts_.back().c = p.ts_.back().c + t.c;
      if (p.ts_.back().c.is_zero()) p.ts_.pop_back();
    } else {
      p.ts_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted(RingPtr ctx, MonomialOrder ord, std::vector<Term> ts) {
  Polynomial p = zero(std::move(ctx), std::move(ord));
  p.ts_ = std::move(ts);
  return p;
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const Term& t : ts_) d = std::max(d, t.m.deg);
  return d;
}

const Term& Polynomial::leading() const {
  if (ts_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return ts_.front();
}

Polynomial Polynomial::with_order(const MonomialOrder& o) const {
  if (ord_ == o) return *this;
  std::vector<Term> ts = ts_;
  return from_terms(ctx_, o, std::move(ts));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ctx(*this, o);
  if (is_zero()) return o.ord_ == ord_ ? o : o.with_order(ord_);
  const Polynomial& g = o.ord_ == ord_ ? o : o.with_order(ord_);
  Polynomial r = zero(ctx_, ord_);
  r.ts_.reserve(ts_.size() + g.ts_.size());
  std::size_t i = 0, j = 0;
  while (i < ts_.size() && j < g.ts_.size()) {
    Cmp c = compare_monomials(ts_[i].m, g.ts_[j].m, ord_);
    if (c == Cmp::Greater)
      r.ts_.push_back(ts_[i++]);
    else if (c == Cmp::Less)
      r.ts_.push_back(g.ts_[j++]);
    else {
      Scalar s = ts_[i].c + g.ts_[j].c;
      if (!s.is_zero()) r.ts_.push_back({s, ts_[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < ts_.size(); ++i) r.ts_.push_back(ts_[i]);
  for (; j < g.ts_.size(); ++j) r.ts_.push_back(g.ts_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.ts_) t.c = -t.c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ctx(*this, o);
  if (is_zero() || o.is_zero()) return zero(ctx_ ? ctx_ : o.ctx_, ord_);
  std::vector<Term> prod;
  prod.reserve(ts_.size() * o.ts_.size());
  for (const Term& a : ts_)
    for (const Term& b : o.ts_) prod.push_back({a.c * b.c, a.m.mul(b.m)});
  return from_terms(ctx_, ord_, std::move(prod));
}

bool Polynomial::operator==(const Polynomial& o) const {
  const Polynomial& g = o.ord_ == ord_ ? o : o.with_order(ord_);
  if (ts_.size() != g.ts_.size()) return false;
  for (std::size_t i = 0; i < ts_.size(); ++i)
    if (!(ts_[i].m == g.ts_[i].m) || ts_[i].c != g.ts_[i].c) return false;
  return true;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return zero(ctx_, ord_);
  Polynomial r = *this;
  for (Term& t : r.ts_) t.c = t.c * c;
  return r;
}

Polynomial Polynomial::add_scaled(const Polynomial& g, const Scalar& c, const Monomial& m) const {
  check_ctx(*this, g);
  if (c.is_zero() || g.is_zero()) return *this;
  const Polynomial& h = g.ord_ == ord_ ? g : g.with_order(ord_);
  Polynomial r = zero(ctx_, ord_);
  r.ts_.reserve(ts_.size() + h.ts_.size());
  std::size_t i = 0, j = 0;
  while (i < ts_.size() && j < h.ts_.size()) {
    Monomial gm = h.ts_[j].m.mul(m);
    Cmp cc = compare_monomials(ts_[i].m, gm, ord_);
    if (cc == Cmp::Greater)
      r.ts_.push_back(ts_[i++]);
    else if (cc == Cmp::Less) {
      r.ts_.push_back({h.ts_[j].c * c, std::move(gm)});
      ++j;
    } else {
      Scalar s = ts_[i].c + h.ts_[j].c * c;
      if (!s.is_zero()) r.ts_.push_back({s, ts_[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < ts_.size(); ++i) r.ts_.push_back(ts_[i]);
  for (; j < h.ts_.size(); ++j) r.ts_.push_back({h.ts_[j].c * c, h.ts_[j].m.mul(m)});
  return r;
}

Polynomial Polynomial::monic() const {
  return scaled(leading().c.inv());
}

Polynomial Polynomial::normalized() const {
  if (is_zero()) return *this;
  if (!ctx_->field.rational()) return monic();
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Term& t : ts_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.rat().get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.rat().get_den().get_mpz_t());
  }
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(ts_.front().c.rat()) < 0) factor = -factor;
  return scaled(Scalar::rational(factor));
}

bool Polynomial::uses_var(VarIndex v) const {
  for (const Term& t : ts_)
    if (t.m.contains(v)) return true;
  return false;
}

bool Polynomial::vars_within(const std::vector<VarIndex>& allowed) const {
  for (const Term& t : ts_)
    for (const auto& [v, k] : t.m.e) {
      (void)k;
      if (!std::binary_search(allowed.begin(), allowed.end(), v)) return false;
    }
  return true;
}

std::string Polynomial::str() const {
  if (ts_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : ts_) {
    Scalar c = t.c;
    if (first) {
      if (c.is_negative()) {
        out += "-";
        c = -c;
      }
    } else {
      if (c.is_negative()) {
        out += " - ";
        c = -c;
      } else {
        out += " + ";
      }
    }
    first = false;
    bool coeff_one = c.is_one();
    if (!coeff_one || t.m.is_one()) out += c.str();
    bool need_star = !coeff_one && !t.m.is_one();
    bool first_var = true;
    for (const auto& [v, k] : t.m.e) {
      if (need_star || !first_var) out += "*";
      need_star = false;
      first_var = false;
      out += ctx_->name(v);
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

std::pair<Scalar, Monomial> leading_term(const Polynomial& f, const MonomialOrder& o) {
  const Term& t = f.with_order(o).leading();
  return {t.c, t.m};
}

Scalar evaluate(const Polynomial& f, const std::vector<Scalar>& point) {
  return evaluate(f, point, ScalarOps{f.ctx()->field});
}

}  // namespace irrep
