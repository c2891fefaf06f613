#include "irrep/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "irrep/expr.hpp"

namespace irrep {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool valid_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha((unsigned char)s[0]) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

// fold_expr builder producing noncommutative polynomials
struct NcBuilder {
  FieldSpec field;
  const std::vector<std::string>& gens;

  NcPolynomial number(const mpq_class& q) const {
    return NcPolynomial::constant(field, (std::uint32_t)gens.size(), Scalar::from_mpq(q, field));
  }
  NcPolynomial symbol(const std::string& s, int line, int col) const {
    auto it = std::find(gens.begin(), gens.end(), s);
    if (it == gens.end()) throw ParseError("unknown identifier '" + s + "'", line, col);
    return NcPolynomial::letter(field, (std::uint32_t)gens.size(),
                                (std::uint32_t)(it - gens.begin()));
  }
  NcPolynomial add(NcPolynomial a, NcPolynomial b) const { return nc_add(a, b); }
  NcPolynomial sub(NcPolynomial a, NcPolynomial b) const { return nc_sub(a, b); }
  NcPolynomial mul(NcPolynomial a, NcPolynomial b) const { return nc_mul(a, b); }
  NcPolynomial neg(NcPolynomial a) const { return nc_neg(a); }
  NcPolynomial pow(NcPolynomial a, std::uint32_t e) const { return nc_pow(a, e); }
};

}  // namespace

NcPolynomial parse_relation(const std::string& text, const FieldSpec& field,
                            const std::vector<std::string>& gens, int line, int col) {
  ExprPtr ast = parse_expression(text, line, col);
  NcBuilder b{field, gens};
  return fold_expr(*ast, b);
}

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool have_field = false, have_dim = false, have_gens = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (std::size_t h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    if (trim(line).empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'key: value'", lineno, 1);
    std::string key = trim(line.substr(0, colon));
    // column where the value starts, for expression error positions
    std::size_t vs = line.find_first_not_of(" \t", colon + 1);
    int vcol = vs == std::string::npos ? (int)colon + 2 : (int)vs + 1;
    std::string val = vs == std::string::npos ? "" : trim(line.substr(vs));
    if (val.empty()) throw ParseError("missing value for '" + key + "'", lineno, vcol);

    if (key == "field") {
      if (val == "QQ") {
        p.field = FieldSpec::QQ();
      } else if (val.rfind("GF(", 0) == 0 && val.back() == ')') {
        std::string inner = val.substr(3, val.size() - 4);
        std::uint64_t q = 0;
        try {
          std::size_t used = 0;
          q = std::stoull(inner, &used);
          if (used != inner.size()) throw std::invalid_argument("");
        } catch (...) {
          throw ParseError("bad field '" + val + "'", lineno, vcol);
        }
        if (!is_prime_u64(q)) throw ParseError("GF modulus must be prime", lineno, vcol);
        p.field = FieldSpec::GF(q);
      } else {
        throw ParseError("bad field '" + val + "' (expected QQ or GF(p))", lineno, vcol);
      }
      have_field = true;
    } else if (key == "dimension") {
      try {
        std::size_t used = 0;
        unsigned long n = std::stoul(val, &used);
        if (used != val.size() || n == 0) throw std::invalid_argument("");
        p.n = (std::uint32_t)n;
      } catch (...) {
        throw ParseError("dimension must be a positive integer", lineno, vcol);
      }
      have_dim = true;
    } else if (key == "generators") {
      std::istringstream gs(val);
      std::string name;
      while (gs >> name) {
        if (!valid_ident(name)) throw ParseError("bad generator name '" + name + "'", lineno, vcol);
        if (std::find(p.gens.begin(), p.gens.end(), name) != p.gens.end())
          throw ParseError("duplicate generator '" + name + "'", lineno, vcol);
        p.gens.push_back(name);
      }
      if (p.gens.empty()) throw ParseError("at least one generator required", lineno, vcol);
      have_gens = true;
    } else if (key == "relation") {
      if (!have_field || !have_gens)
        throw ParseError("relation before field/generators", lineno, 1);
      p.relations.push_back(parse_relation(val, p.field, p.gens, lineno, vcol));
    } else if (key == "hint") {
      p.hints.push_back(val);
    } else {
      throw ParseError("unknown key '" + key + "'", lineno, 1);
    }
  }
  if (!have_field) throw ParseError("missing 'field:' line", lineno, 1);
  if (!have_dim) throw ParseError("missing 'dimension:' line", lineno, 1);
  if (!have_gens) throw ParseError("missing 'generators:' line", lineno, 1);
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::string out;
  out += "field: " + p.field.str() + "\n";
  out += "dimension: " + std::to_string(p.n) + "\n";
  out += "generators:";
  for (const auto& g : p.gens) out += " " + g;
  out += "\n";
  for (const auto& r : p.relations) out += "relation: " + r.str(p.gens) + "\n";
  for (const auto& h : p.hints) out += "hint: " + h + "\n";
  return out;
}

}  // namespace irrep
