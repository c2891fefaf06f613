// Recursive-descent parser for the shared expression grammar:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ('^' NAT)?
//   base   := IDENT | RAT | '(' expr ')'
//   RAT    := INT ('/' POSINT)?
#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>

namespace irrep {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line),
        col(col) {}
};

struct Expr {
  enum class Kind { Num, Sym, Add, Sub, Mul, Neg, Pow } kind;
  mpq_class num;                 // Num
  std::string sym;               // Sym
  std::unique_ptr<Expr> a, b;    // operands
  std::uint32_t exp = 0;         // Pow
  int line = 0, col = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

// line/col give the position of the expression's first character within the
// enclosing file, so errors point into the original text.
ExprPtr parse_expression(const std::string& text, int line = 1, int col = 1);

// Generic fold over the AST. Builder must provide:
//   Value number(const mpq_class&), Value symbol(const std::string&, int line, int col),
//   Value add/sub/mul(Value, Value), Value neg(Value), Value pow(Value, uint32_t).
template <class B>
auto fold_expr(const Expr& e, B& builder) -> decltype(builder.number(mpq_class())) {
  switch (e.kind) {
    case Expr::Kind::Num:
      return builder.number(e.num);
    case Expr::Kind::Sym:
      return builder.symbol(e.sym, e.line, e.col);
    case Expr::Kind::Add:
      return builder.add(fold_expr(*e.a, builder), fold_expr(*e.b, builder));
    case Expr::Kind::Sub:
      return builder.sub(fold_expr(*e.a, builder), fold_expr(*e.b, builder));
    case Expr::Kind::Mul:
      return builder.mul(fold_expr(*e.a, builder), fold_expr(*e.b, builder));
    case Expr::Kind::Neg:
      return builder.neg(fold_expr(*e.a, builder));
    case Expr::Kind::Pow:
      return builder.pow(fold_expr(*e.a, builder), e.exp);
  }
  throw std::logic_error("unreachable");
}

}  // namespace irrep
