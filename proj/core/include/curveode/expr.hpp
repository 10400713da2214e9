#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "curveode/rational.hpp"
#include "curveode/series.hpp"

namespace curveode {

// Arithmetic expression over rationals and named variables:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' ['-'] integer)?
//   base   := integer | ident | '(' expr ')'
// Rational constants are written as quotients (e.g. 1/2), which the usual
// precedence rules evaluate exactly.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, variable, add, sub, mul, div, neg, pow };

  Kind kind;
  Rational value;    // number
  std::string name;  // variable
  ExprPtr lhs;       // binary left operand, or the neg/pow operand
  ExprPtr rhs;       // binary right operand
  long exponent = 0; // pow
};

ExprPtr parse_expr(const std::string& text);

// Infix rendering with minimal parentheses; parses back to the same tree.
std::string to_string(const ExprPtr& e);

std::set<std::string> collect_variables(const ExprPtr& e);

using LaurentEnv = std::map<std::string, LaurentSeries>;

// Evaluate over Laurent series, capping intermediate knowledge horizons at
// `work_trunc`.  Division by an exact zero raises ZeroDivision; division by
// something that merely vanishes to precision raises IndeterminateOrder.
LaurentSeries eval(const ExprPtr& e, const LaurentEnv& env, long work_trunc);

}  // namespace curveode
