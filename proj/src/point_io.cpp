#include "irrep/point_io.hpp"

#include <sstream>
#include <stdexcept>

#include "irrep/expr.hpp"

namespace irrep {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha((unsigned char)s[0]) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum((unsigned char)c) && c != '_') return false;
  return true;
}

// univariate polynomials in the pending level variable "t", coefficients in
// the tower built so far
struct UPolyBuilder {
  const ExtensionTower& tw;

  UPoly number(const mpq_class& q) {
    return up_trim(tw, {tw.from_scalar(Scalar::from_mpq(q, tw.field))});
  }
  UPoly symbol(const std::string& name, int ln, int col) {
    if (name == "t") return {tw.zero(), tw.one()};
    for (std::size_t i = 0; i < tw.height(); ++i)
      if (tw.levels[i].name == name) return {tw.gen(i + 1)};
    throw ParseError("unknown tower variable '" + name + "'", ln, col);
  }
  UPoly add(UPoly a, UPoly b) { return up_add(tw, a, b); }
  UPoly sub(UPoly a, UPoly b) { return up_add(tw, a, up_scale(tw, b, tw.from_int(-1))); }
  UPoly mul(UPoly a, UPoly b) { return up_mul(tw, a, b); }
  UPoly neg(UPoly a) { return up_scale(tw, a, tw.from_int(-1)); }
  UPoly pow(UPoly a, std::uint32_t e) {
    UPoly r{tw.one()};
    for (std::uint32_t i = 0; i < e; ++i) r = up_mul(tw, r, a);
    return r;
  }
};

struct ElemBuilder {
  const ExtensionTower& tw;

  TowerElem number(const mpq_class& q) { return tw.from_scalar(Scalar::from_mpq(q, tw.field)); }
  TowerElem symbol(const std::string& name, int ln, int col) {
    for (std::size_t i = 0; i < tw.height(); ++i)
      if (tw.levels[i].name == name) return tw.gen(i + 1);
    throw ParseError("unknown tower variable '" + name + "'", ln, col);
  }
  TowerElem add(TowerElem a, TowerElem b) { return tw.add(a, b); }
  TowerElem sub(TowerElem a, TowerElem b) { return tw.sub(a, b); }
  TowerElem mul(TowerElem a, TowerElem b) { return tw.mul(a, b); }
  TowerElem neg(TowerElem a) { return tw.neg(a); }
  TowerElem pow(TowerElem a, std::uint32_t e) { return tw.pow(a, e); }
};

// split at top-level commas, returning pieces with their column offsets
std::vector<std::pair<std::string, std::size_t>> split_list(const std::string& s,
                                                            std::size_t base, int lineno) {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    char c = i < s.size() ? s[i] : ',';
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') {
      --depth;
      if (depth < 0) throw ParseError("unbalanced brackets", lineno, (int)(base + i) + 1);
    }
    if (c == ',' && depth == 0) {
      std::string piece = s.substr(start, i - start);
      std::size_t off = piece.find_first_not_of(" \t");
      if (off == std::string::npos)
        throw ParseError("empty list entry", lineno, (int)(base + start) + 1);
      out.emplace_back(trim(piece), base + start + off);
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets", lineno, (int)(base + s.size()) + 1);
  return out;
}

// strips one layer of [ ] and returns the inside with its offset
std::pair<std::string, std::size_t> unbracket(const std::string& s, std::size_t base, int lineno) {
  std::string t = trim(s);
  std::size_t lead = s.find_first_not_of(" \t");
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ParseError("expected a bracketed list", lineno, (int)(base + (lead == std::string::npos ? 0 : lead)) + 1);
  return {t.substr(1, t.size() - 2), base + lead + 1};
}

}  // namespace

RepresentationPoint parse_point(const std::string& text, const Presentation& pres) {
  RepresentationPoint pt;
  pt.n = pres.n;
  pt.field = pres.field;
  pt.gens = pres.gens;
  pt.tower = ExtensionTower(pres.field);
  ExtensionTower& tw = pt.tower;

  std::vector<std::optional<Mat<TowerElem>>> mats(pres.gens.size());
  bool matrix_seen = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (std::size_t h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    if (trim(line).empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", lineno, 1);
    std::string key = trim(line.substr(0, colon));
    std::size_t vs = line.find_first_not_of(" \t", colon + 1);
    int vcol = vs == std::string::npos ? (int)colon + 2 : (int)vs + 1;
    std::string val = vs == std::string::npos ? "" : trim(line.substr(vs));
    if (val.empty()) throw ParseError("missing value for '" + key + "'", lineno, vcol);

    if (key == "tower") {
      if (matrix_seen) throw ParseError("tower lines must precede matrices", lineno, 1);
      std::size_t eq = val.find('=');
      if (eq == std::string::npos)
        throw ParseError("expected 'tower: name = polynomial in t'", lineno, vcol);
      std::string name = trim(val.substr(0, eq));
      if (!valid_ident(name) || name == "t")
        throw ParseError("bad tower level name '" + name + "'", lineno, vcol);
      for (const auto& lv : tw.levels)
        if (lv.name == name) throw ParseError("duplicate tower level '" + name + "'", lineno, vcol);
      std::string rhs = trim(val.substr(eq + 1));
      if (rhs.empty()) throw ParseError("missing level polynomial", lineno, vcol);
      int rcol = vcol + (int)(val.find_first_not_of(" \t", eq + 1));
      ExprPtr e = parse_expression(rhs, lineno, rcol);
      UPolyBuilder ub{tw};
      UPoly p = up_trim(tw, fold_expr(*e, ub));
      if (p.size() < 2) throw ParseError("level polynomial must have degree >= 1", lineno, rcol);
      if (!tw.equal(p.back(), tw.one())) {
        try {
          p = up_monic(tw, p);
        } catch (const DivideByZero&) {
          throw ParseError("level polynomial has a non-invertible leading coefficient", lineno, rcol);
        }
      }
      tw.levels.push_back({name, p});
      continue;
    }
    if (key.rfind("matrix", 0) == 0 && key.size() > 6 && (key[6] == ' ' || key[6] == '\t')) {
      std::string name = trim(key.substr(6));
      if (!valid_ident(name)) throw ParseError("expected 'matrix NAME: [[...],...]'", lineno, 1);
      std::size_t gi = pres.gens.size();
      for (std::size_t i = 0; i < pres.gens.size(); ++i)
        if (pres.gens[i] == name) gi = i;
      if (gi == pres.gens.size())
        throw ParseError("unknown generator '" + name + "'", lineno, 1);
      if (mats[gi]) throw ParseError("duplicate matrix for '" + name + "'", lineno, 1);
      matrix_seen = true;

      auto [inner, ioff] = unbracket(line.substr(vs), vs, lineno);
      auto rows = split_list(inner, ioff, lineno);
      if (rows.size() != pres.n)
        throw ParseError("expected " + std::to_string(pres.n) + " rows", lineno, vcol);
      Mat<TowerElem> m(pres.n, tw.zero());
      ElemBuilder eb{tw};
      for (std::size_t i = 0; i < rows.size(); ++i) {
        auto [rin, roff] = unbracket(rows[i].first, rows[i].second, lineno);
        auto cells = split_list(rin, roff, lineno);
        if (cells.size() != pres.n)
          throw ParseError("expected " + std::to_string(pres.n) + " entries in row " +
                               std::to_string(i + 1),
                           lineno, (int)rows[i].second + 1);
        for (std::size_t j = 0; j < cells.size(); ++j) {
          ExprPtr e = parse_expression(cells[j].first, lineno, (int)cells[j].second + 1);
          m.at((std::uint32_t)i, (std::uint32_t)j) = tw.raise(fold_expr(*e, eb));
        }
      }
      mats[gi] = std::move(m);
      continue;
    }
    if (key == "witness") {
      if (pt.witness_descriptor) throw ParseError("duplicate witness line", lineno, 1);
      pt.witness_descriptor = val;
      continue;
    }
    throw ParseError("unknown key '" + key + "'", lineno, 1);
  }

  for (std::size_t i = 0; i < mats.size(); ++i)
    if (!mats[i]) throw ParseError("missing matrix for generator '" + pres.gens[i] + "'", lineno, 1);
  for (auto& m : mats) pt.mats.push_back(std::move(*m));
  return pt;
}

std::string print_point(const RepresentationPoint& pt) {
  std::ostringstream out;
  const ExtensionTower& tw = pt.tower;
  for (std::size_t i = 1; i <= tw.height(); ++i) {
    ExtensionTower sub(tw.field);
    sub.levels.assign(tw.levels.begin(), tw.levels.begin() + (i - 1));
    out << "tower: " << tw.levels[i - 1].name << " = "
        << up_str(sub, tw.levels[i - 1].minpoly, "t") << "\n";
  }
  for (std::size_t l = 0; l < pt.mats.size(); ++l) {
    out << "matrix " << pt.gens[l] << ": [";
    for (std::uint32_t i = 0; i < pt.n; ++i) {
      if (i) out << ", ";
      out << "[";
      for (std::uint32_t j = 0; j < pt.n; ++j) {
        if (j) out << ", ";
        out << tw.str(pt.mats[l].at(i, j));
      }
      out << "]";
    }
    out << "]\n";
  }
  if (pt.witness_descriptor) out << "witness: " << *pt.witness_descriptor << "\n";
  return out.str();
}

}  // namespace irrep
