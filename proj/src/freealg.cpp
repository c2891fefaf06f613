#include "irrep/freealg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace irrep {

bool ncword_less(const NcWord& a, const NcWord& b) {
  if (a.g.size() != b.g.size()) return a.g.size() < b.g.size();
  return std::lexicographical_compare(a.g.begin(), a.g.end(), b.g.begin(), b.g.end());
}

namespace {

void check_compat(const NcPolynomial& f, const NcPolynomial& g) {
  if (f.field() != g.field()) throw FieldMismatch();
  if (f.ngens() != g.ngens()) throw std::invalid_argument("generator set mismatch");
}

}  // namespace

NcPolynomial NcPolynomial::zero(FieldSpec f, std::uint32_t ngens) {
  NcPolynomial p;
  p.field_ = f;
  p.ngens_ = ngens;
  return p;
}

NcPolynomial NcPolynomial::constant(FieldSpec f, std::uint32_t ngens, const Scalar& c) {
  return word(f, ngens, NcWord::one(), c);
}

NcPolynomial NcPolynomial::letter(FieldSpec f, std::uint32_t ngens, std::uint32_t i) {
  return word(f, ngens, NcWord::letter(i), Scalar::one(f));
}

NcPolynomial NcPolynomial::word(FieldSpec f, std::uint32_t ngens, const NcWord& w,
                                const Scalar& c) {
  NcPolynomial p = zero(f, ngens);
  for (std::uint32_t i : w.g)
    if (i >= ngens) throw std::out_of_range("word letter outside the generator set");
  if (!c.is_zero()) p.ts_.push_back({w, c});
  return p;
}

NcPolynomial NcPolynomial::from_terms(FieldSpec f, std::uint32_t ngens, TermVec ts) {
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return ncword_less(a.first, b.first); });
  NcPolynomial p = zero(f, ngens);
  for (auto& [w, c] : ts) {
    for (std::uint32_t i : w.g)
      if (i >= ngens) throw std::out_of_range("word letter outside the generator set");
    if (c.is_zero()) continue;
    if (!p.ts_.empty() && p.ts_.back().first == w) {
      p.ts_.back().second = p.ts_.back().second + c;
      if (p.ts_.back().second.is_zero()) p.ts_.pop_back();
    } else {
      p.ts_.push_back({w, c});
    }
  }
  return p;
}

bool NcPolynomial::operator==(const NcPolynomial& o) const {
  if (field_ != o.field_ || ngens_ != o.ngens_ || ts_.size() != o.ts_.size()) return false;
  for (std::size_t i = 0; i < ts_.size(); ++i)
    if (!(ts_[i].first == o.ts_[i].first) || ts_[i].second != o.ts_[i].second) return false;
  return true;
}

NcPolynomial nc_add(const NcPolynomial& f, const NcPolynomial& g) {
  check_compat(f, g);
  NcPolynomial::TermVec ts = f.terms();
  ts.insert(ts.end(), g.terms().begin(), g.terms().end());
  return NcPolynomial::from_terms(f.field(), f.ngens(), std::move(ts));
}

NcPolynomial nc_neg(const NcPolynomial& f) {
  NcPolynomial::TermVec ts = f.terms();
  for (auto& [w, c] : ts) c = -c;
  return NcPolynomial::from_terms(f.field(), f.ngens(), std::move(ts));
}

NcPolynomial nc_sub(const NcPolynomial& f, const NcPolynomial& g) {
  return nc_add(f, nc_neg(g));
}

NcPolynomial nc_mul(const NcPolynomial& f, const NcPolynomial& g) {
  check_compat(f, g);
  NcPolynomial::TermVec ts;
  ts.reserve(f.terms().size() * g.terms().size());
  for (const auto& [wf, cf] : f.terms())
    for (const auto& [wg, cg] : g.terms()) ts.push_back({wf.concat(wg), cf * cg});
  return NcPolynomial::from_terms(f.field(), f.ngens(), std::move(ts));
}

NcPolynomial nc_scale(const NcPolynomial& f, const Scalar& c) {
  NcPolynomial::TermVec ts = f.terms();
  for (auto& [w, k] : ts) k = k * c;
  return NcPolynomial::from_terms(f.field(), f.ngens(), std::move(ts));
}

NcPolynomial nc_pow(const NcPolynomial& f, std::uint32_t e) {
  NcPolynomial r = NcPolynomial::constant(f.field(), f.ngens(), Scalar::one(f.field()));
  for (std::uint32_t i = 0; i < e; ++i) r = nc_mul(r, f);
  return r;
}

NcPolynomial standard_polynomial(std::uint32_t m, FieldSpec f) {
  if (m == 0) throw std::invalid_argument("standard polynomial needs m >= 1");
  if (m > 8) throw std::invalid_argument("standard polynomial materialized only for m <= 8");
  std::vector<std::uint32_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  NcPolynomial::TermVec ts;
  do {
    unsigned inv = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inv;
    NcWord w;
    w.g.assign(perm.begin(), perm.end());
    Scalar c = Scalar::one(f);
    if (inv & 1) c = -c;
    ts.push_back({std::move(w), c});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return NcPolynomial::from_terms(f, m, std::move(ts));
}

std::string NcPolynomial::str(const std::vector<std::string>& names) const {
  if (ts_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : ts_) {
    bool neg = c.is_negative();
    Scalar mag = neg ? -c : c;
    std::string cs = mag.str();
    std::string ws;
    for (std::size_t i = 0; i < w.g.size();) {
      std::size_t j = i;
      while (j < w.g.size() && w.g[j] == w.g[i]) ++j;
      if (!ws.empty()) ws += "*";
      ws += names.at(w.g[i]);
      if (j - i > 1) ws += "^" + std::to_string(j - i);
      i = j;
    }
    std::string piece;
    if (ws.empty())
      piece = cs;
    else
      piece = cs == "1" ? ws : cs + "*" + ws;
    if (out.empty())
      out = neg ? "-" + piece : piece;
    else
      out += (neg ? " - " : " + ") + piece;
  }
  return out;
}

}  // namespace irrep
