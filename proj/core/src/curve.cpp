#include "curveode/curve.hpp"

#include <algorithm>

#include "curveode/error.hpp"

namespace curveode {

namespace {

BivariatePoly normalized(BivariatePoly p) {
  size_t width = 0;
  for (const auto& row : p.coeff) width = std::max(width, row.size());
  if (width == 0) width = 1;
  for (auto& row : p.coeff) row.resize(width, Rational(0));
  if (p.coeff.empty()) p.coeff.push_back(std::vector<Rational>(width, Rational(0)));
  auto row_zero = [](const std::vector<Rational>& r) {
    return std::all_of(r.begin(), r.end(), [](const Rational& c) { return c == 0; });
  };
  while (p.coeff.size() > 1 && row_zero(p.coeff.back())) p.coeff.pop_back();
  size_t used = 1;
  for (const auto& row : p.coeff) {
    for (size_t j = row.size(); j > used; --j) {
      if (row[j - 1] != 0) {
        used = j;
        break;
      }
    }
  }
  for (auto& row : p.coeff) row.resize(used, Rational(0));
  return p;
}

BivariatePoly poly_constant(const Rational& c) {
  return BivariatePoly{{{c}}};
}

bool poly_is_constant(const BivariatePoly& p) {
  return p.coeff.size() == 1 && p.coeff[0].size() == 1;
}

BivariatePoly poly_add(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  size_t rows = std::max(a.coeff.size(), b.coeff.size());
  size_t cols = std::max(a.coeff[0].size(), b.coeff[0].size());
  out.coeff.assign(rows, std::vector<Rational>(cols, Rational(0)));
  for (size_t i = 0; i < a.coeff.size(); ++i) {
    for (size_t j = 0; j < a.coeff[i].size(); ++j) out.coeff[i][j] = a.coeff[i][j];
  }
  for (size_t i = 0; i < b.coeff.size(); ++i) {
    for (size_t j = 0; j < b.coeff[i].size(); ++j) out.coeff[i][j] += b.coeff[i][j];
  }
  return normalized(std::move(out));
}

BivariatePoly poly_scale(const Rational& c, BivariatePoly p) {
  for (auto& row : p.coeff) {
    for (auto& x : row) x *= c;
  }
  return normalized(std::move(p));
}

BivariatePoly poly_mul(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  out.coeff.assign(a.coeff.size() + b.coeff.size() - 1,
                   std::vector<Rational>(a.coeff[0].size() + b.coeff[0].size() - 1,
                                         Rational(0)));
  for (size_t i = 0; i < a.coeff.size(); ++i) {
    for (size_t j = 0; j < a.coeff[i].size(); ++j) {
      if (a.coeff[i][j] == 0) continue;
      for (size_t k = 0; k < b.coeff.size(); ++k) {
        for (size_t l = 0; l < b.coeff[k].size(); ++l) {
          out.coeff[i + k][j + l] += a.coeff[i][j] * b.coeff[k][l];
        }
      }
    }
  }
  return normalized(std::move(out));
}

BivariatePoly build_poly(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::number:
      return poly_constant(e->value);
    case Expr::Kind::variable:
      if (e->name == "u") return BivariatePoly{{{Rational(0)}, {Rational(1)}}};
      if (e->name == "t") return BivariatePoly{{{Rational(0), Rational(1)}}};
      fail(errc::invalid_chart,
           "curve polynomial may only use u and t, found '" + e->name + "'");
    case Expr::Kind::neg:
      return poly_scale(Rational(-1), build_poly(e->lhs));
    case Expr::Kind::add:
      return poly_add(build_poly(e->lhs), build_poly(e->rhs));
    case Expr::Kind::sub:
      return poly_add(build_poly(e->lhs),
                      poly_scale(Rational(-1), build_poly(e->rhs)));
    case Expr::Kind::mul:
      return poly_mul(build_poly(e->lhs), build_poly(e->rhs));
    case Expr::Kind::div: {
      BivariatePoly den = build_poly(e->rhs);
      if (!poly_is_constant(den)) {
        fail(errc::invalid_chart,
             "curve polynomial cannot divide by '" + to_string(e->rhs) + "'");
      }
      if (den.coeff[0][0] == 0) {
        fail(errc::zero_division, "division by zero in curve polynomial");
      }
      return poly_scale(1 / den.coeff[0][0], build_poly(e->lhs));
    }
    case Expr::Kind::pow: {
      BivariatePoly base = build_poly(e->lhs);
      long exp = e->exponent;
      if (exp < 0) {
        if (!poly_is_constant(base)) {
          fail(errc::invalid_chart, "negative power of a non-constant in curve polynomial");
        }
        if (base.coeff[0][0] == 0) {
          fail(errc::zero_division, "negative power of zero in curve polynomial");
        }
        base = poly_constant(1 / base.coeff[0][0]);
        exp = -exp;
      }
      BivariatePoly acc = poly_constant(Rational(1));
      for (long i = 0; i < exp; ++i) acc = poly_mul(acc, base);
      return acc;
    }
  }
  fail(errc::invalid_chart, "malformed curve polynomial expression");
}

TruncatedSeries pad_to(const TruncatedSeries& a, long n) {
  std::vector<Rational> c(a.coeffs());
  c.resize(static_cast<size_t>(n) + 1, Rational(0));
  return TruncatedSeries(std::move(c), n, false);
}

void validate(const CurveChart& chart) {
  Rational on_curve = eval_at(chart.F, chart.u0, Rational(0));
  if (on_curve != 0) {
    fail(errc::not_on_curve,
         "F(u0, 0) = " + to_string(on_curve) + ", the point is not on the curve");
  }
  if (eval_at(d_du(chart.F), chart.u0, Rational(0)) == 0) {
    fail(errc::degenerate_branch,
         "dF/du vanishes at (u0, 0); the branch is not simple");
  }
}

}  // namespace

BivariatePoly bivariate_from_expr(const ExprPtr& e) { return build_poly(e); }

BivariatePoly d_du(const BivariatePoly& p) {
  BivariatePoly out;
  if (p.coeff.size() <= 1) return poly_constant(Rational(0));
  out.coeff.assign(p.coeff.size() - 1, {});
  for (size_t i = 1; i < p.coeff.size(); ++i) {
    out.coeff[i - 1] = p.coeff[i];
    for (auto& c : out.coeff[i - 1]) c *= static_cast<long>(i);
  }
  return normalized(std::move(out));
}

Rational eval_at(const BivariatePoly& p, const Rational& u, const Rational& t) {
  Rational acc(0);
  for (size_t i = p.coeff.size(); i-- > 0;) {
    Rational row(0);
    for (size_t j = p.coeff[i].size(); j-- > 0;) {
      row = row * t + p.coeff[i][j];
    }
    acc = acc * u + row;
  }
  return acc;
}

TruncatedSeries eval_series(const BivariatePoly& p, const TruncatedSeries& u,
                            long N) {
  if (u.known_through() < N) {
    fail(errc::insufficient_truncation,
         "branch series must be known through degree " + std::to_string(N));
  }
  TruncatedSeries acc = TruncatedSeries::zero(N);
  for (size_t i = p.coeff.size(); i-- > 0;) {
    std::vector<Rational> row(p.coeff[i].begin(),
                              p.coeff[i].begin() +
                                  std::min(p.coeff[i].size(),
                                           static_cast<size_t>(N) + 1));
    TruncatedSeries row_series(std::move(row), N, false);
    acc = add(mul(acc, u), row_series);
  }
  return acc;
}

CurveChart make_chart(const std::string& f_text, const std::string& u0_text,
                      const std::map<std::string, std::string>& coord_texts) {
  CurveChart chart;
  chart.F = bivariate_from_expr(parse_expr(f_text));
  chart.u0 = parse_rational(u0_text);
  for (const auto& [name, text] : coord_texts) {
    ExprPtr e = parse_expr(text);
    for (const std::string& v : collect_variables(e)) {
      if (v != "u" && v != "t") {
        fail(errc::invalid_chart, "coordinate '" + name +
                                      "' references undefined variable '" + v +
                                      "'");
      }
    }
    chart.coords.emplace(name, std::move(e));
  }
  return chart;
}

CurveChart hyperbola_chart() {
  return make_chart("u^2 - t^2 - 1", "1", {{"x", "1/t"}, {"y", "u/t"}});
}

CurveChart projective_line_chart() {
  return make_chart("u - t", "0", {{"s", "1/t"}});
}

std::vector<TruncatedSeries> expand_branch_steps(const CurveChart& chart, long N) {
  if (N < 0) fail(errc::invalid_argument, "truncation must be non-negative");
  validate(chart);
  BivariatePoly fu = d_du(chart.F);
  std::vector<TruncatedSeries> steps;
  TruncatedSeries u = TruncatedSeries::constant(chart.u0, 0);
  steps.push_back(u);
  long valuation = 1;  // residual vanishes mod T^valuation
  while (valuation < N + 1) {
    long next = std::min(2 * valuation, N + 1);
    long work = next - 1;
    TruncatedSeries up = pad_to(u, work);
    TruncatedSeries residual = eval_series(chart.F, up, work);
    TruncatedSeries derivative = eval_series(fu, up, work);
    u = sub(up, mul(residual, invert(derivative, work)));
    steps.push_back(u);
    valuation = next;
  }
  return steps;
}

TruncatedSeries expand_branch(const CurveChart& chart, long N) {
  return expand_branch_steps(chart, N).back();
}

LaurentSeries sharp_embed(const ExprPtr& expr, const CurveChart& chart, long N) {
  for (const std::string& v : collect_variables(expr)) {
    if (chart.coords.find(v) == chart.coords.end()) {
      fail(errc::unknown_variable,
           "'" + v + "' is not a declared coordinate of the chart");
    }
  }
  long margin = 8;
  for (int attempt = 0; attempt < 4; ++attempt, margin *= 2) {
    long work = N + margin;
    TruncatedSeries u = expand_branch(chart, work);
    LaurentEnv base{
        {"u", LaurentSeries::from_series(u)},
        {"t", LaurentSeries(1, TruncatedSeries::polynomial({Rational(1)}))}};
    try {
      LaurentEnv env;
      for (const auto& [name, ce] : chart.coords) {
        env.emplace(name, eval(ce, base, work));
      }
      LaurentSeries result = eval(expr, env, work);
      if (result.identically_zero()) return result;
      if (result.known_through() >= N) return result.truncated_at(N);
    } catch (const Error& err) {
      // A denominator that merely vanishes to precision may resolve with a
      // wider working window; anything else is a hard failure.
      if (err.code() != errc::indeterminate_order) throw;
    }
  }
  fail(errc::precision_exhausted,
       "cancellation consumed the working precision while embedding '" +
           to_string(expr) + "'");
}

LaurentSeries sharp_embed(const std::string& expr_text, const CurveChart& chart,
                          long N) {
  return sharp_embed(parse_expr(expr_text), chart, N);
}

}  // namespace curveode
