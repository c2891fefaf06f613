#include "irrep/expr.hpp"

#include <cctype>

namespace irrep {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;
  int line, col;

  Lexer(const std::string& s, int line, int col) : s(s), line(line), col(col) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r' || s[pos] == '\n')) {
      if (s[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  char advance() {
    char c = s[pos++];
    ++col;
    return c;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
};

struct Parser {
  Lexer lx;

  Parser(const std::string& s, int line, int col) : lx(s, line, col) {}

  ExprPtr make(Expr::Kind k) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->line = lx.line;
    e->col = lx.col;
    return e;
  }

  bool ident_char(char c, bool first) {
    return c == '_' || (first ? std::isalpha((unsigned char)c) : std::isalnum((unsigned char)c));
  }

  std::string read_ident() {
    std::string id;
    id += lx.advance();
    while (lx.pos < lx.s.size() && ident_char(lx.s[lx.pos], false)) id += lx.advance();
    return id;
  }

  mpz_class read_int() {
    std::string digits;
    while (lx.pos < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.pos])) digits += lx.advance();
    return mpz_class(digits);
  }

  ExprPtr base() {
    char c = lx.peek();
    if (c == '(') {
      lx.advance();
      ExprPtr e = expr();
      if (lx.peek() != ')') lx.fail("mismatched parentheses: expected ')'");
      lx.advance();
      return e;
    }
    if (std::isdigit((unsigned char)c)) {
      auto e = make(Expr::Kind::Num);
      mpz_class n = read_int();
      if (lx.peek() == '/') {
        lx.advance();
        if (!std::isdigit((unsigned char)lx.peek())) lx.fail("expected integer denominator");
        mpz_class d = read_int();
        if (d == 0) lx.fail("zero denominator");
        e->num = mpq_class(n, d);
        e->num.canonicalize();
      } else {
        e->num = mpq_class(n);
      }
      return e;
    }
    if (ident_char(c, true)) {
      auto e = make(Expr::Kind::Sym);
      e->sym = read_ident();
      return e;
    }
    if (c == '\0') lx.fail("unexpected end of expression");
    lx.fail(std::string("unexpected character '") + c + "'");
  }

  ExprPtr factor() {
    if (lx.peek() == '-') {
      // unary minus binds a whole factor: "a * -2" and "x + -3*y" parse
      auto e = make(Expr::Kind::Neg);
      lx.advance();
      e->a = factor();
      return e;
    }
    ExprPtr b = base();
    if (lx.peek() == '^') {
      auto e = make(Expr::Kind::Pow);
      lx.advance();
      if (!std::isdigit((unsigned char)lx.peek())) lx.fail("exponent must be a nonnegative integer");
      mpz_class n = read_int();
      if (!n.fits_uint_p()) lx.fail("exponent too large");
      e->exp = static_cast<std::uint32_t>(n.get_ui());
      e->a = std::move(b);
      return e;
    }
    return b;
  }

  ExprPtr term() {
    ExprPtr f = factor();
    while (lx.peek() == '*') {
      auto e = make(Expr::Kind::Mul);
      lx.advance();
      e->a = std::move(f);
      e->b = factor();
      f = std::move(e);
    }
    return f;
  }

  ExprPtr expr() {
    ExprPtr lhs;
    if (lx.peek() == '-') {
      auto e = make(Expr::Kind::Neg);
      lx.advance();
      e->a = term();
      lhs = std::move(e);
    } else {
      lhs = term();
    }
    while (true) {
      char c = lx.peek();
      if (c != '+' && c != '-') break;
      auto e = make(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub);
      lx.advance();
      e->a = std::move(lhs);
      e->b = term();
      lhs = std::move(e);
    }
    return lhs;
  }

  ExprPtr run() {
    ExprPtr e = expr();
    if (!lx.eof()) lx.fail("trailing input after expression");
    return e;
  }
};

}  // namespace

ExprPtr parse_expression(const std::string& text, int line, int col) {
  Parser p(text, line, col);
  return p.run();
}

}  // namespace irrep
