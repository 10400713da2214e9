#pragma once

#include <map>
#include <string>
#include <vector>

#include "curveode/expr.hpp"
#include "curveode/rational.hpp"
#include "curveode/series.hpp"

namespace curveode {

// Polynomial in (u, t): coeff[i][j] multiplies u^i t^j.
struct BivariatePoly {
  std::vector<std::vector<Rational>> coeff;
};

// Build from an expression over the variables u and t; anything that would
// leave the polynomial ring (division by a non-constant, negative powers,
// other variables) raises InvalidChart.
BivariatePoly bivariate_from_expr(const ExprPtr& e);
BivariatePoly d_du(const BivariatePoly& p);
Rational eval_at(const BivariatePoly& p, const Rational& u, const Rational& t);
// Substitute u(T) for u and T for t, working through degree N.
TruncatedSeries eval_series(const BivariatePoly& p, const TruncatedSeries& u, long N);

// One affine chart of a plane curve F(u, t) = 0 with a marked point
// (u0, 0) and named coordinate functions expressed in (u, t).
struct CurveChart {
  BivariatePoly F;
  Rational u0;
  std::map<std::string, ExprPtr> coords;
};

CurveChart make_chart(const std::string& f_text, const std::string& u0_text,
                      const std::map<std::string, std::string>& coord_texts);

// The hyperbola u^2 - t^2 = 1 at (1, 0) with x = 1/t, y = u/t.
CurveChart hyperbola_chart();
// The trivial curve u = t with s = 1/t (classical constant-coefficient case).
CurveChart projective_line_chart();

// Branch u(T) with u(0) = u0 and F(u(T), T) = 0 mod T^(N+1), by Newton
// lifting.  Raises NotOnCurve / DegenerateBranch when the chart is bad.
TruncatedSeries expand_branch(const CurveChart& chart, long N);

// Successive Newton iterates u_0, u_1, ... (residual valuation doubles per
// step); the last one, cut to N, is what expand_branch returns.
std::vector<TruncatedSeries> expand_branch_steps(const CurveChart& chart, long N);

// The embedding of a rational expression in the chart's coordinates into
// Laurent series, known through degree N.  Variables must be declared
// coordinates.  Division by exact zero raises ZeroDivision; cancellation
// that survives the internal precision retries raises PrecisionExhausted.
LaurentSeries sharp_embed(const ExprPtr& expr, const CurveChart& chart, long N);
LaurentSeries sharp_embed(const std::string& expr_text, const CurveChart& chart,
                          long N);

}  // namespace curveode
