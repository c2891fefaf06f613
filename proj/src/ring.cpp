#include "irrep/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace irrep {

Monomial Monomial::var(VarIndex v, std::uint32_t k) {
  Monomial m;
  if (k > 0) {
    m.e.push_back({v, k});
    m.deg = k;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarIndex v) const {
  for (const auto& [w, k] : e)
    if (w == v) return k;
  return 0;
}

Monomial Monomial::mul(const Monomial& o) const {
  Monomial r;
  r.e.reserve(e.size() + o.e.size());
  std::size_t i = 0, j = 0;
  while (i < e.size() && j < o.e.size()) {
    if (e[i].first < o.e[j].first)
      r.e.push_back(e[i++]);
    else if (e[i].first > o.e[j].first)
      r.e.push_back(o.e[j++]);
    else {
      r.e.push_back({e[i].first, e[i].second + o.e[j].second});
      ++i;
      ++j;
    }
  }
  for (; i < e.size(); ++i) r.e.push_back(e[i]);
  for (; j < o.e.size(); ++j) r.e.push_back(o.e[j]);
  r.deg = deg + o.deg;
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  if (o.deg > deg) return false;
  std::size_t i = 0;
  for (const auto& [v, k] : o.e) {
    while (i < e.size() && e[i].first < v) ++i;
    if (i == e.size() || e[i].first != v || e[i].second < k) return false;
  }
  return true;
}

Monomial Monomial::div(const Monomial& o) const {
  Monomial r;
  std::size_t j = 0;
  for (const auto& [v, k] : e) {
    std::uint32_t sub = 0;
    if (j < o.e.size() && o.e[j].first == v) sub = o.e[j++].second;
    if (k > sub) r.e.push_back({v, k - sub});
  }
  r.deg = deg - o.deg;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.e.size() && j < b.e.size()) {
    if (a.e[i].first < b.e[j].first)
      r.e.push_back(a.e[i++]);
    else if (a.e[i].first > b.e[j].first)
      r.e.push_back(b.e[j++]);
    else {
      r.e.push_back({a.e[i].first, std::max(a.e[i].second, b.e[j].second)});
      ++i;
      ++j;
    }
  }
  for (; i < a.e.size(); ++i) r.e.push_back(a.e[i]);
  for (; j < b.e.size(); ++j) r.e.push_back(b.e[j]);
  r.deg = 0;
  for (const auto& [v, k] : r.e) r.deg += k;
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.e.size() && j < b.e.size()) {
    if (a.e[i].first < b.e[j].first)
      ++i;
    else if (a.e[i].first > b.e[j].first)
      ++j;
    else
      return false;
  }
  return true;
}

MonomialOrder MonomialOrder::block(std::vector<VarIndex> elim, OrderKind inner_elim,
                                   OrderKind inner_keep) {
  MonomialOrder o;
  o.kind = OrderKind::Block;
  std::sort(elim.begin(), elim.end());
  o.eliminated = std::move(elim);
  o.elim_inner = inner_elim;
  o.keep_inner = inner_keep;
  return o;
}

namespace {

Cmp cmp_lex(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.e.size() && j < b.e.size()) {
    if (a.e[i].first < b.e[j].first) return Cmp::Greater;
    if (a.e[i].first > b.e[j].first) return Cmp::Less;
    if (a.e[i].second != b.e[j].second)
      return a.e[i].second > b.e[j].second ? Cmp::Greater : Cmp::Less;
    ++i;
    ++j;
  }
  if (i < a.e.size()) return Cmp::Greater;
  if (j < b.e.size()) return Cmp::Less;
  return Cmp::Equal;
}

Cmp cmp_grevlex(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? Cmp::Greater : Cmp::Less;
  // scan from the least significant (highest-index) variable down
  std::size_t i = a.e.size(), j = b.e.size();
  while (i > 0 && j > 0) {
    const auto& [va, ka] = a.e[i - 1];
    const auto& [vb, kb] = b.e[j - 1];
    if (va > vb) return Cmp::Less;     // a has the later variable: bigger exp there
    if (vb > va) return Cmp::Greater;  // b has the later variable
    if (ka != kb) return ka < kb ? Cmp::Greater : Cmp::Less;
    --i;
    --j;
  }
  if (i > 0) return Cmp::Less;  // leftover entries sit at later vars than b has
  if (j > 0) return Cmp::Greater;
  return Cmp::Equal;
}

Cmp cmp_kind(const Monomial& a, const Monomial& b, OrderKind k) {
  return k == OrderKind::Lex ? cmp_lex(a, b) : cmp_grevlex(a, b);
}

Monomial project(const Monomial& m, const std::vector<VarIndex>& vars, bool keep_listed) {
  Monomial r;
  for (const auto& [v, k] : m.e) {
    bool listed = std::binary_search(vars.begin(), vars.end(), v);
    if (listed == keep_listed) {
      r.e.push_back({v, k});
      r.deg += k;
    }
  }
  return r;
}

}  // namespace

Cmp compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
  switch (o.kind) {
    case OrderKind::Lex:
      return cmp_lex(a, b);
    case OrderKind::Grevlex:
      return cmp_grevlex(a, b);
    case OrderKind::Block: {
      Cmp c = cmp_kind(project(a, o.eliminated, true), project(b, o.eliminated, true), o.elim_inner);
      if (c != Cmp::Equal) return c;
      return cmp_kind(project(a, o.eliminated, false), project(b, o.eliminated, false), o.keep_inner);
    }
  }
  return Cmp::Equal;
}

VarIndex RingContext::index(const std::string& name) const {
  auto it = idx_.find(name);
  if (it == idx_.end()) throw std::out_of_range("unknown variable: " + name);
  return it->second;
}

std::optional<VarIndex> RingContext::find(const std::string& name) const {
  auto it = idx_.find(name);
  if (it == idx_.end()) return std::nullopt;
  return it->second;
}

RingPtr RingContext::make(FieldSpec f, std::vector<std::string> names, MonomialOrder ord) {
  auto ctx = std::make_shared<RingContext>();
  ctx->field = f;
  ctx->order = std::move(ord);
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto [it, fresh] = ctx->idx_.emplace(names[i], static_cast<VarIndex>(i));
    (void)it;
    if (!fresh) throw std::invalid_argument("duplicate variable name: " + names[i]);
  }
  ctx->names = std::move(names);
  return ctx;
}

RingPtr register_ring(const FieldSpec& f, const std::vector<std::string>& names,
                      const MonomialOrder& order) {
  if (!f.rational() && !is_prime_u64(f.p))
    throw std::invalid_argument("non-prime modulus: " + std::to_string(f.p));
  return RingContext::make(f, names, order);
}

}  // namespace irrep
