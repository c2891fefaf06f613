// Free associative algebra: noncommutative words and polynomials, the
// standard identity, and generic matrix evaluation templates.
#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "irrep/scalar.hpp"

namespace irrep {

struct NcWord {
  // generator indices, left to right; empty is the identity word
  boost::container::small_vector<std::uint32_t, 8> g;

  static NcWord one() { return {}; }
  static NcWord letter(std::uint32_t i) {
    NcWord w;
    w.g.push_back(i);
    return w;
  }

  std::size_t length() const { return g.size(); }
  NcWord concat(const NcWord& o) const {
    NcWord w = *this;
    w.g.insert(w.g.end(), o.g.begin(), o.g.end());
    return w;
  }
  bool operator==(const NcWord& o) const { return g == o.g; }
};

// graded lexicographic: shorter words first, then letter-by-letter
bool ncword_less(const NcWord& a, const NcWord& b);

class NcPolynomial {
 public:
  using TermVec = std::vector<std::pair<NcWord, Scalar>>;

  NcPolynomial() = default;
  static NcPolynomial zero(FieldSpec f, std::uint32_t ngens);
  static NcPolynomial constant(FieldSpec f, std::uint32_t ngens, const Scalar& c);
  static NcPolynomial letter(FieldSpec f, std::uint32_t ngens, std::uint32_t i);
  static NcPolynomial word(FieldSpec f, std::uint32_t ngens, const NcWord& w, const Scalar& c);
  static NcPolynomial from_terms(FieldSpec f, std::uint32_t ngens, TermVec ts);

  FieldSpec field() const { return field_; }
  std::uint32_t ngens() const { return ngens_; }
  const TermVec& terms() const { return ts_; }  // ascending graded lex
  bool is_zero() const { return ts_.empty(); }
  bool operator==(const NcPolynomial& o) const;
  bool operator!=(const NcPolynomial& o) const { return !(*this == o); }

  std::string str(const std::vector<std::string>& names) const;

 private:
  FieldSpec field_;
  std::uint32_t ngens_ = 0;
  TermVec ts_;
};

NcPolynomial nc_add(const NcPolynomial& f, const NcPolynomial& g);
NcPolynomial nc_sub(const NcPolynomial& f, const NcPolynomial& g);
NcPolynomial nc_mul(const NcPolynomial& f, const NcPolynomial& g);
NcPolynomial nc_neg(const NcPolynomial& f);
NcPolynomial nc_scale(const NcPolynomial& f, const Scalar& c);
NcPolynomial nc_pow(const NcPolynomial& f, std::uint32_t e);

// sum over all m! permutations with sign; materialized only for m <= 8
NcPolynomial standard_polynomial(std::uint32_t m, FieldSpec f = FieldSpec::QQ());

// ---- dense square matrices over any ops bundle ------------------------------

template <typename T>
struct Mat {
  std::size_t n = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(std::size_t dim, const T& fill) : n(dim), a(dim * dim, fill) {}
  T& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

template <typename Ops>
Mat<typename Ops::Elem> mat_zero(std::size_t n, const Ops& ops) {
  return Mat<typename Ops::Elem>(n, ops.zero());
}

template <typename Ops>
Mat<typename Ops::Elem> mat_identity(std::size_t n, const Ops& ops) {
  Mat<typename Ops::Elem> m(n, ops.zero());
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ops.one();
  return m;
}

template <typename Ops>
Mat<typename Ops::Elem> mat_add(const Mat<typename Ops::Elem>& x, const Mat<typename Ops::Elem>& y,
                                const Ops& ops) {
  Mat<typename Ops::Elem> r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = ops.add(r.a[i], y.a[i]);
  return r;
}

template <typename Ops>
Mat<typename Ops::Elem> mat_sub(const Mat<typename Ops::Elem>& x, const Mat<typename Ops::Elem>& y,
                                const Ops& ops) {
  Mat<typename Ops::Elem> r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = ops.sub(r.a[i], y.a[i]);
  return r;
}

template <typename Ops>
Mat<typename Ops::Elem> mat_mul(const Mat<typename Ops::Elem>& x, const Mat<typename Ops::Elem>& y,
                                const Ops& ops) {
  std::size_t n = x.n;
  Mat<typename Ops::Elem> r(n, ops.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& xik = x.at(i, k);
      if (ops.is_zero(xik)) continue;
      for (std::size_t j = 0; j < n; ++j)
        r.at(i, j) = ops.add(r.at(i, j), ops.mul(xik, y.at(k, j)));
    }
  return r;
}

template <typename Ops>
Mat<typename Ops::Elem> mat_scale(const Mat<typename Ops::Elem>& x, const typename Ops::Elem& c,
                                  const Ops& ops) {
  Mat<typename Ops::Elem> r = x;
  for (auto& e : r.a) e = ops.mul(e, c);
  return r;
}

template <typename Ops>
typename Ops::Elem mat_trace(const Mat<typename Ops::Elem>& x, const Ops& ops) {
  typename Ops::Elem t = ops.zero();
  for (std::size_t i = 0; i < x.n; ++i) t = ops.add(t, x.at(i, i));
  return t;
}

template <typename Ops>
bool mat_is_zero(const Mat<typename Ops::Elem>& x, const Ops& ops) {
  for (const auto& e : x.a)
    if (!ops.is_zero(e)) return false;
  return true;
}

struct MatNoPost {
  template <typename M>
  void operator()(M&) const {}
};

// substitute one matrix per generator slot; `post` runs after every matrix
// product (e.g. normal-form reduction of the entries)
template <typename Ops, typename Post = MatNoPost>
Mat<typename Ops::Elem> evaluate_nc(const NcPolynomial& f,
                                    const std::vector<Mat<typename Ops::Elem>>& mats,
                                    const Ops& ops, Post post = {}) {
  if (mats.size() < f.ngens()) throw std::invalid_argument("missing generator matrix");
  std::size_t n = mats.empty() ? 0 : mats.front().n;
  for (const auto& m : mats)
    if (m.n != n) throw std::invalid_argument("matrix dimension mismatch");
  Mat<typename Ops::Elem> acc = mat_zero<Ops>(n, ops);
  for (const auto& [w, c] : f.terms()) {
    Mat<typename Ops::Elem> prod = mat_identity<Ops>(n, ops);
    for (std::uint32_t letter : w.g) {
      prod = mat_mul<Ops>(prod, mats[letter], ops);
      post(prod);
    }
    acc = mat_add<Ops>(acc, mat_scale<Ops>(prod, ops.from_scalar(c), ops), ops);
  }
  return acc;
}

// evaluate the standard polynomial s_m at m matrices without materializing the
// m! terms: depth-first over permutations, reusing each prefix product
template <typename Ops, typename Post = MatNoPost>
Mat<typename Ops::Elem> evaluate_standard(const std::vector<Mat<typename Ops::Elem>>& mats,
                                          const Ops& ops, Post post = {}) {
  const std::size_t m = mats.size();
  if (m == 0) throw std::invalid_argument("standard polynomial needs at least one slot");
  std::size_t n = mats.front().n;
  for (const auto& x : mats)
    if (x.n != n) throw std::invalid_argument("matrix dimension mismatch");
  Mat<typename Ops::Elem> acc = mat_zero<Ops>(n, ops);
  std::uint32_t used = 0;

  auto rec = [&](auto&& self, const Mat<typename Ops::Elem>& prefix, std::size_t depth,
                 bool odd) -> void {
    if (depth == m) {
      acc = odd ? mat_sub<Ops>(acc, prefix, ops) : mat_add<Ops>(acc, prefix, ops);
      return;
    }
    for (std::size_t e = 0; e < m; ++e) {
      if (used & (1u << e)) continue;
      // inversions added: already-placed letters with a larger index
      unsigned inv = (unsigned)__builtin_popcount(used >> (e + 1));
      used |= 1u << e;
      Mat<typename Ops::Elem> next = mat_mul<Ops>(prefix, mats[e], ops);
      post(next);
      self(self, next, depth + 1, odd ^ (inv & 1));
      used &= ~(1u << e);
    }
  };
  rec(rec, mat_identity<Ops>(n, ops), 0, false);
  return acc;
}

}  // namespace irrep
