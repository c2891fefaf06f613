#include "irrep/tower.hpp"

#include <stdexcept>

namespace irrep {

namespace {

// coefficient-vector arithmetic at a fixed height; every helper below takes
// the height of the ELEMENTS it operates on

bool ez_is_zero(const TowerElem& a);

bool vec_is_zero(const std::vector<TowerElem>& v) {
  for (const auto& x : v)
    if (!ez_is_zero(x)) return false;
  return true;
}

bool ez_is_zero(const TowerElem& a) {
  if (a.h == 0) return a.s.is_zero();
  return vec_is_zero(a.c);
}

}  // namespace

// ---- internal recursive element ops ---------------------------------------

namespace {

struct Eng {
  const ExtensionTower& t;

  TowerElem zero_at(int h) const {
    TowerElem e;
    e.h = h;
    if (h == 0) e.s = Scalar::zero(t.field);
    return e;
  }

  TowerElem one_at(int h) const {
    TowerElem e;
    e.h = h;
    if (h == 0) {
      e.s = Scalar::one(t.field);
    } else {
      e.c.push_back(one_at(h - 1));
    }
    return e;
  }

  std::vector<TowerElem> trim(std::vector<TowerElem> v) const {
    while (!v.empty() && ez_is_zero(v.back())) v.pop_back();
    return v;
  }

  TowerElem make(int h, std::vector<TowerElem> v) const {
    TowerElem e;
    e.h = h;
    e.c = trim(std::move(v));
    return e;
  }

  TowerElem add(const TowerElem& a, const TowerElem& b) const {
    if (a.h != b.h) throw std::logic_error("tower element height mismatch");
    if (a.h == 0) {
      TowerElem e;
      e.h = 0;
      e.s = a.s + b.s;
      return e;
    }
    std::vector<TowerElem> v;
    std::size_t n = std::max(a.c.size(), b.c.size());
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < a.c.size() && i < b.c.size())
        v.push_back(add(a.c[i], b.c[i]));
      else if (i < a.c.size())
        v.push_back(a.c[i]);
      else
        v.push_back(b.c[i]);
    }
    return make(a.h, std::move(v));
  }

  TowerElem neg(const TowerElem& a) const {
    if (a.h == 0) {
      TowerElem e;
      e.h = 0;
      e.s = -a.s;
      return e;
    }
    TowerElem e;
    e.h = a.h;
    e.c.reserve(a.c.size());
    for (const auto& x : a.c) e.c.push_back(neg(x));
    return e;
  }

  TowerElem sub(const TowerElem& a, const TowerElem& b) const { return add(a, neg(b)); }

  // reduce a coefficient vector (height h elements, forming a polynomial at
  // height h+1) modulo the monic minpoly of level h+1
  std::vector<TowerElem> rem_monic(std::vector<TowerElem> v, const std::vector<TowerElem>& m,
                                   int coeff_h) const {
    std::size_t d = m.size() - 1;
    v = trim(std::move(v));
    while (v.size() > d) {
      TowerElem lead = v.back();
      std::size_t shift = v.size() - 1 - d;
      if (!ez_is_zero(lead)) {
        for (std::size_t i = 0; i < d; ++i)
          v[shift + i] = sub(v[shift + i], mul(lead, m[i]));
      }
      v.pop_back();
      v = trim(std::move(v));
      (void)coeff_h;
    }
    return v;
  }

  TowerElem mul(const TowerElem& a, const TowerElem& b) const {
    if (a.h != b.h) throw std::logic_error("tower element height mismatch");
    if (a.h == 0) {
      TowerElem e;
      e.h = 0;
      e.s = a.s * b.s;
      return e;
    }
    if (a.c.empty() || b.c.empty()) return zero_at(a.h);
    std::vector<TowerElem> v(a.c.size() + b.c.size() - 1, zero_at(a.h - 1));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (ez_is_zero(a.c[i])) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j)
        v[i + j] = add(v[i + j], mul(a.c[i], b.c[j]));
    }
    v = rem_monic(std::move(v), t.levels[a.h - 1].minpoly, a.h - 1);
    return make(a.h, std::move(v));
  }

  // divide polynomial u by v (coeffs at height h), inverting v's leading
  // coefficient; returns remainder, and quotient via out param
  std::vector<TowerElem> divmod(std::vector<TowerElem> u, const std::vector<TowerElem>& v,
                                int h, std::vector<TowerElem>* quot) const {
    if (v.empty()) throw std::logic_error("division by zero polynomial");
    TowerElem lcinv = inv(v.back());
    u = trim(std::move(u));
    std::vector<TowerElem> q(u.size() >= v.size() ? u.size() - v.size() + 1 : 0, zero_at(h));
    while (u.size() >= v.size()) {
      TowerElem f = mul(u.back(), lcinv);
      std::size_t shift = u.size() - v.size();
      q[shift] = f;
      for (std::size_t i = 0; i < v.size(); ++i) u[shift + i] = sub(u[shift + i], mul(f, v[i]));
      u = trim(std::move(u));
    }
    if (quot) *quot = trim(std::move(q));
    return u;
  }

  TowerElem inv(const TowerElem& a) const {
    if (a.h == 0) {
      TowerElem e;
      e.h = 0;
      e.s = a.s.inv();
      return e;
    }
    if (ez_is_zero(a)) throw DivideByZero();
    const std::vector<TowerElem>& M = t.levels[a.h - 1].minpoly;
    int ch = a.h - 1;
    // extended Euclid for gcd(a, M) with Bezout coefficient for a
    std::vector<TowerElem> r0 = M, r1 = trim(a.c);
    std::vector<TowerElem> t0, t1{one_at(ch)};
    while (true) {
      if (r1.empty()) {
        // nontrivial gcd r0: a zero divisor was found at this level
        if (r0.size() >= M.size()) throw DivideByZero();
        SplitRequest sr;
        sr.level = static_cast<std::size_t>(a.h);
        TowerElem lcinv = inv(r0.back());
        for (auto& x : r0) x = mul(x, lcinv);
        sr.factor = std::move(r0);
        throw sr;
      }
      if (r1.size() == 1) {
        TowerElem cinv = inv(r1[0]);
        std::vector<TowerElem> res;
        res.reserve(t1.size());
        for (auto& x : t1) res.push_back(mul(x, cinv));
        res = rem_monic(std::move(res), M, ch);
        return make(a.h, std::move(res));
      }
      std::vector<TowerElem> q;
      std::vector<TowerElem> r2 = divmod(r0, r1, ch, &q);
      // t2 = t0 - q*t1
      std::vector<TowerElem> qt(q.empty() || t1.empty()
                                    ? std::vector<TowerElem>{}
                                    : std::vector<TowerElem>(q.size() + t1.size() - 1, zero_at(ch)));
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < t1.size(); ++j) qt[i + j] = add(qt[i + j], mul(q[i], t1[j]));
      std::vector<TowerElem> t2;
      std::size_t n = std::max(t0.size(), qt.size());
      for (std::size_t i = 0; i < n; ++i) {
        TowerElem x = i < t0.size() ? t0[i] : zero_at(ch);
        if (i < qt.size()) x = sub(x, qt[i]);
        t2.push_back(std::move(x));
      }
      r0 = std::move(r1);
      r1 = trim(std::move(r2));
      t0 = std::move(t1);
      t1 = trim(std::move(t2));
    }
  }

  TowerElem reduce(const TowerElem& a) const {
    if (a.h == 0) return a;
    std::vector<TowerElem> v;
    v.reserve(a.c.size());
    for (const auto& x : a.c) v.push_back(reduce(x));
    v = rem_monic(std::move(v), t.levels[a.h - 1].minpoly, a.h - 1);
    return make(a.h, std::move(v));
  }
};

}  // namespace

// ---- ExtensionTower public API ---------------------------------------------

std::size_t ExtensionTower::residue_dimension() const {
  std::size_t d = 1;
  for (std::size_t i = 1; i <= height(); ++i) d *= level_degree(i);
  return d;
}

TowerElem ExtensionTower::zero() const { return Eng{*this}.zero_at((int)height()); }
TowerElem ExtensionTower::one() const { return Eng{*this}.one_at((int)height()); }

TowerElem ExtensionTower::from_scalar(const Scalar& v) const {
  TowerElem x;
  x.h = 0;
  x.s = v;
  for (std::size_t h = 1; h <= height(); ++h) {
    TowerElem up;
    up.h = (int)h;
    if (!ez_is_zero(x)) up.c.push_back(std::move(x));
    x = std::move(up);
  }
  return x;
}

TowerElem ExtensionTower::from_int(long n) const { return from_scalar(Scalar::of_int(n, field)); }

TowerElem ExtensionTower::gen(std::size_t level) const {
  Eng e{*this};
  if (level == 0 || level > height()) throw std::out_of_range("tower level out of range");
  TowerElem x;  // the generator at its own height: polynomial "t"
  x.h = (int)level;
  x.c.push_back(e.zero_at((int)level - 1));
  x.c.push_back(e.one_at((int)level - 1));
  if (level_degree(level) == 1) {
    // degree-1 level: the generator collapses to a constant; reduce
    x.c = e.rem_monic(std::move(x.c), levels[level - 1].minpoly, (int)level - 1);
  }
  for (std::size_t h = level + 1; h <= height(); ++h) {
    TowerElem up;
    up.h = (int)h;
    if (!ez_is_zero(x)) up.c.push_back(std::move(x));
    x = std::move(up);
  }
  return x;
}

void ExtensionTower::refine(const SplitRequest& split) {
  if (split.level == 0 || split.level > height()) throw std::out_of_range("bad split level");
  if (split.factor.size() < 2 || split.factor.size() >= levels[split.level - 1].minpoly.size())
    throw std::logic_error("split factor must be a proper divisor");
  levels[split.level - 1].minpoly = split.factor;
  // deeper levels' minpolys have coefficients over this level; re-reduce them
  for (std::size_t l = split.level + 1; l <= height(); ++l) {
    for (auto& coeff : levels[l - 1].minpoly) coeff = reduce(coeff);
  }
}

TowerElem ExtensionTower::add(const TowerElem& a, const TowerElem& b) const {
  return Eng{*this}.add(a, b);
}
TowerElem ExtensionTower::sub(const TowerElem& a, const TowerElem& b) const {
  return Eng{*this}.sub(a, b);
}
TowerElem ExtensionTower::mul(const TowerElem& a, const TowerElem& b) const {
  return Eng{*this}.mul(a, b);
}
TowerElem ExtensionTower::neg(const TowerElem& a) const { return Eng{*this}.neg(a); }
TowerElem ExtensionTower::inv(const TowerElem& a) const { return Eng{*this}.inv(a); }

TowerElem ExtensionTower::pow(const TowerElem& a, std::uint64_t e) const {
  TowerElem r = one();
  TowerElem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

bool ExtensionTower::is_zero(const TowerElem& a) const { return ez_is_zero(a); }

bool ExtensionTower::equal(const TowerElem& a, const TowerElem& b) const {
  return ez_is_zero(sub(a, b));
}

TowerElem ExtensionTower::reduce(const TowerElem& a) const { return Eng{*this}.reduce(a); }

TowerElem ExtensionTower::raise(TowerElem a) const {
  while (a.h < (int)height()) {
    TowerElem up;
    up.h = a.h + 1;
    if (!ez_is_zero(a)) up.c.push_back(std::move(a));
    a = std::move(up);
  }
  if (a.h != (int)height()) throw std::logic_error("element taller than tower");
  return a;
}

bool ExtensionTower::base_scalar(const TowerElem& a, Scalar* out) const {
  const TowerElem* cur = &a;
  while (cur->h > 0) {
    if (cur->c.empty()) {
      if (out) *out = Scalar::zero(field);
      return true;
    }
    if (cur->c.size() > 1) return false;
    cur = &cur->c[0];
  }
  if (out) *out = cur->s;
  return true;
}

namespace {

bool str_is_atom(const std::string& s) {
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == ' ' || ch == '+') return false;
    if (ch == '-' && i > 0) return false;
  }
  return s[0] != '-' || s.size() > 1;
}

std::string wrap(const std::string& s) { return str_is_atom(s) ? s : "(" + s + ")"; }

std::string str_at(const ExtensionTower& t, const TowerElem& a) {
  if (a.h == 0) return a.s.str();
  std::string out;
  const std::string& nm = t.levels[a.h - 1].name;
  for (std::size_t j = 0; j < a.c.size(); ++j) {
    if (ez_is_zero(a.c[j])) continue;
    std::string cs = str_at(t, a.c[j]);
    std::string piece;
    if (j == 0) {
      piece = cs;
    } else {
      std::string power = nm + (j > 1 ? "^" + std::to_string(j) : "");
      piece = cs == "1" ? power : wrap(cs) + "*" + power;
    }
    if (out.empty())
      out = piece;
    else
      out += " + " + piece;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string ExtensionTower::str(const TowerElem& a) const { return str_at(*this, a); }

std::string ExtensionTower::level_poly_str(std::size_t level) const {
  const Level& lv = levels.at(level - 1);
  UPoly p;
  ExtensionTower sub(field);
  sub.levels.assign(levels.begin(), levels.begin() + (level - 1));
  for (const auto& coeff : lv.minpoly) p.push_back(coeff);
  return up_str(sub, p, lv.name);
}

// ---- univariate polynomials over a tower ------------------------------------

UPoly up_trim(const ExtensionTower& t, UPoly p) {
  while (!p.empty() && t.is_zero(p.back())) p.pop_back();
  return p;
}

std::size_t up_deg(const UPoly& p) { return p.size() - 1; }

UPoly up_add(const ExtensionTower& t, const UPoly& a, const UPoly& b) {
  UPoly r;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i < a.size() && i < b.size())
      r.push_back(t.add(a[i], b[i]));
    else
      r.push_back(i < a.size() ? a[i] : b[i]);
  }
  return up_trim(t, std::move(r));
}

UPoly up_scale(const ExtensionTower& t, const UPoly& a, const TowerElem& c) {
  UPoly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(t.mul(x, c));
  return up_trim(t, std::move(r));
}

UPoly up_mul(const ExtensionTower& t, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, t.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (t.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = t.add(r[i + j], t.mul(a[i], b[j]));
  }
  return up_trim(t, std::move(r));
}

UPoly up_rem(const ExtensionTower& t, UPoly a, const UPoly& b) {
  if (b.empty()) throw std::logic_error("polynomial division by zero");
  TowerElem lcinv = t.inv(b.back());
  a = up_trim(t, std::move(a));
  while (a.size() >= b.size() && !a.empty()) {
    TowerElem f = t.mul(a.back(), lcinv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = t.sub(a[shift + i], t.mul(f, b[i]));
    a = up_trim(t, std::move(a));
  }
  return a;
}

std::pair<UPoly, UPoly> up_divmod(const ExtensionTower& t, UPoly a, const UPoly& b) {
  if (b.empty()) throw std::logic_error("polynomial division by zero");
  TowerElem lcinv = t.inv(b.back());
  a = up_trim(t, std::move(a));
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, t.zero());
  while (a.size() >= b.size()) {
    TowerElem f = t.mul(a.back(), lcinv);
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = t.sub(a[shift + i], t.mul(f, b[i]));
    a = up_trim(t, std::move(a));
  }
  return {up_trim(t, std::move(q)), std::move(a)};
}

UPoly up_monic(const ExtensionTower& t, const UPoly& a) {
  if (a.empty()) return a;
  TowerElem lcinv = t.inv(a.back());
  return up_scale(t, a, lcinv);
}

UPoly up_gcd_monic(const ExtensionTower& t, UPoly a, UPoly b) {
  a = up_trim(t, std::move(a));
  b = up_trim(t, std::move(b));
  while (!b.empty()) {
    UPoly r = up_rem(t, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return up_monic(t, a);
}

UPoly up_derivative(const ExtensionTower& t, const UPoly& a) {
  UPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(t.mul(a[i], t.from_int((long)i)));
  return up_trim(t, std::move(r));
}

TowerElem up_eval(const ExtensionTower& t, const UPoly& p, const TowerElem& x) {
  TowerElem acc = t.zero();
  for (std::size_t i = p.size(); i > 0; --i) acc = t.add(t.mul(acc, x), p[i - 1]);
  return acc;
}

std::string up_str(const ExtensionTower& t, const UPoly& p, const std::string& var) {
  std::string out;
  for (std::size_t j = p.size(); j > 0; --j) {
    const TowerElem& cj = p[j - 1];
    if (t.is_zero(cj)) continue;
    std::string cs = t.str(cj);
    std::string piece;
    std::size_t d = j - 1;
    if (d == 0) {
      piece = cs;
    } else {
      std::string power = var + (d > 1 ? "^" + std::to_string(d) : "");
      piece = cs == "1" ? power : wrap(cs) + "*" + power;
    }
    out += out.empty() ? piece : " + " + piece;
  }
  return out.empty() ? "0" : out;
}

}  // namespace irrep
