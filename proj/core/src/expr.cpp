#include "curveode/expr.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "curveode/error.hpp"

namespace curveode {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::number, s.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::ident, s.substr(start, i - start), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default:
        fail(errc::syntax_error, "unexpected character '" + std::string(1, c) +
                                     "' at position " + std::to_string(i));
    }
    out.push_back({k, s.substr(start, 1), start});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

ExprPtr make_number(Rational v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::number;
  e->value = std::move(v);
  return e;
}

ExprPtr make_variable(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::variable;
  e->name = std::move(name);
  return e;
}

ExprPtr make_unary(Expr::Kind k, ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(operand);
  return e;
}

ExprPtr make_binary(Expr::Kind k, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr make_pow(ExprPtr base, long exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::pow;
  e->lhs = std::move(base);
  e->exponent = exponent;
  return e;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    expect(Tok::end, "end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }

  void expect(Tok k, const std::string& what) {
    if (peek().kind == k) {
      ++i_;
      return;
    }
    const Token& t = peek();
    std::string got = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    fail(errc::syntax_error, "expected " + what + " but found " + got +
                                 " at position " + std::to_string(t.pos));
  }

  ExprPtr expr() {
    bool negated = accept(Tok::minus);
    ExprPtr e = term();
    if (negated) e = make_unary(Expr::Kind::neg, std::move(e));
    for (;;) {
      if (accept(Tok::plus)) {
        e = make_binary(Expr::Kind::add, std::move(e), term());
      } else if (accept(Tok::minus)) {
        e = make_binary(Expr::Kind::sub, std::move(e), term());
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      if (accept(Tok::star)) {
        e = make_binary(Expr::Kind::mul, std::move(e), factor());
      } else if (accept(Tok::slash)) {
        e = make_binary(Expr::Kind::div, std::move(e), factor());
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    ExprPtr e = base();
    if (!accept(Tok::caret)) return e;
    bool neg = accept(Tok::minus);
    const Token& t = peek();
    expect(Tok::number, "an integer exponent");
    errno = 0;
    long exp = std::strtol(t.text.c_str(), nullptr, 10);
    if (errno != 0) {
      fail(errc::syntax_error, "exponent out of range at position " +
                                   std::to_string(t.pos));
    }
    return make_pow(std::move(e), neg ? -exp : exp);
  }

  ExprPtr base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        Token tok = take();
        return make_number(Rational(Integer(tok.text)));
      }
      case Tok::ident: {
        Token tok = take();
        return make_variable(tok.text);
      }
      case Tok::lparen: {
        take();
        ExprPtr e = expr();
        expect(Tok::rparen, "')'");
        return e;
      }
      default: {
        std::string got = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        fail(errc::syntax_error, "expected a value but found " + got +
                                     " at position " + std::to_string(t.pos));
      }
    }
  }

  std::vector<Token> toks_;
  size_t i_ = 0;
};

// Precedence levels for the printer: higher binds tighter.
int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return 1;
    case Expr::Kind::neg: return 1;
    case Expr::Kind::mul:
    case Expr::Kind::div: return 2;
    case Expr::Kind::pow: return 3;
    default: return 4;
  }
}

void print(std::ostringstream& out, const ExprPtr& e, int parent_prec,
           bool right_side) {
  int prec = precedence(e->kind);
  bool parens = prec < parent_prec ||
                (prec == parent_prec && right_side &&
                 (e->kind == Expr::Kind::add || e->kind == Expr::Kind::sub ||
                  e->kind == Expr::Kind::mul || e->kind == Expr::Kind::div));
  if (parens) out << "(";
  switch (e->kind) {
    case Expr::Kind::number:
      if (sgn(e->value) < 0) {
        out << "(" << to_string(e->value) << ")";
      } else {
        out << to_string(e->value);
      }
      break;
    case Expr::Kind::variable:
      out << e->name;
      break;
    case Expr::Kind::neg:
      out << "-";
      print(out, e->lhs, prec + 1, false);
      break;
    case Expr::Kind::add:
    case Expr::Kind::sub:
      print(out, e->lhs, prec, false);
      out << (e->kind == Expr::Kind::add ? " + " : " - ");
      print(out, e->rhs, prec, true);
      break;
    case Expr::Kind::mul:
    case Expr::Kind::div:
      print(out, e->lhs, prec, false);
      out << (e->kind == Expr::Kind::mul ? "*" : "/");
      print(out, e->rhs, prec, true);
      break;
    case Expr::Kind::pow:
      print(out, e->lhs, prec + 1, false);
      out << "^" << e->exponent;
      break;
  }
  if (parens) out << ")";
}

void collect(const ExprPtr& e, std::set<std::string>& names) {
  if (!e) return;
  if (e->kind == Expr::Kind::variable) names.insert(e->name);
  collect(e->lhs, names);
  collect(e->rhs, names);
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string to_string(const ExprPtr& e) {
  std::ostringstream out;
  print(out, e, 0, false);
  return out.str();
}

std::set<std::string> collect_variables(const ExprPtr& e) {
  std::set<std::string> names;
  collect(e, names);
  return names;
}

LaurentSeries eval(const ExprPtr& e, const LaurentEnv& env, long work_trunc) {
  switch (e->kind) {
    case Expr::Kind::number:
      return LaurentSeries::from_series(TruncatedSeries::polynomial({e->value}));
    case Expr::Kind::variable: {
      auto it = env.find(e->name);
      if (it == env.end()) {
        fail(errc::unknown_variable, "unknown variable '" + e->name + "'");
      }
      return it->second;
    }
    case Expr::Kind::neg:
      return laurent_negate(eval(e->lhs, env, work_trunc));
    case Expr::Kind::add:
      return laurent_add(eval(e->lhs, env, work_trunc),
                         eval(e->rhs, env, work_trunc));
    case Expr::Kind::sub:
      return laurent_sub(eval(e->lhs, env, work_trunc),
                         eval(e->rhs, env, work_trunc));
    case Expr::Kind::mul:
      return laurent_mul(eval(e->lhs, env, work_trunc),
                         eval(e->rhs, env, work_trunc))
          .truncated_at(work_trunc);
    case Expr::Kind::div: {
      LaurentSeries num = eval(e->lhs, env, work_trunc);
      LaurentSeries den = eval(e->rhs, env, work_trunc);
      if (den.identically_zero()) {
        fail(errc::zero_division,
             "denominator '" + to_string(e->rhs) + "' is zero");
      }
      if (den.is_zero()) {
        fail(errc::indeterminate_order,
             "denominator '" + to_string(e->rhs) +
                 "' vanishes to working precision");
      }
      long cap = std::max(work_trunc - num.ord(), 0L);
      return laurent_mul(num, laurent_invert(den, cap)).truncated_at(work_trunc);
    }
    case Expr::Kind::pow: {
      LaurentSeries b = eval(e->lhs, env, work_trunc);
      if (e->exponent < 0) {
        if (b.identically_zero()) {
          fail(errc::zero_division,
               "negative power of zero in '" + to_string(e) + "'");
        }
        if (b.is_zero()) {
          fail(errc::indeterminate_order,
               "base '" + to_string(e->lhs) + "' vanishes to working precision");
        }
      }
      long cap = work_trunc + std::abs(e->exponent) * std::abs(b.ord());
      return laurent_pow(b, e->exponent, cap).truncated_at(work_trunc);
    }
  }
  fail(errc::invalid_argument, "malformed expression node");
}

}  // namespace curveode
