#include <doctest.h>

#include "curveode/curve.hpp"
#include "oracles.hpp"
#include "testing.hpp"

using namespace curveode;
using testutil::error_code_of;
using testutil::rat;
using testutil::rats;
using testutil::ts;

TEST_CASE("bivariate_from_expr builds the coefficient matrix") {
  BivariatePoly f = bivariate_from_expr(parse_expr("u^2 - t^2 - 1"));
  REQUIRE(f.coeff.size() == 3);
  CHECK(f.coeff[0][0] == -1);
  CHECK(f.coeff[0][2] == -1);
  CHECK(f.coeff[2][0] == 1);
  CHECK(f.coeff[1][0] == 0);

  BivariatePoly g = bivariate_from_expr(parse_expr("(u+t)^2"));
  CHECK(g.coeff[2][0] == 1);
  CHECK(g.coeff[1][1] == 2);
  CHECK(g.coeff[0][2] == 1);

  BivariatePoly h = bivariate_from_expr(parse_expr("u/2 + t/4"));
  CHECK(h.coeff[1][0] == rat("1/2"));
  CHECK(h.coeff[0][1] == rat("1/4"));

  for (const char* bad : {"u/t", "u^-1", "x+u", "1/u", "(u+t)^-2"}) {
    CAPTURE(bad);
    CHECK(error_code_of([&] { bivariate_from_expr(parse_expr(bad)); }) ==
          errc::invalid_chart);
  }
}

TEST_CASE("d_du and point evaluation") {
  BivariatePoly f = bivariate_from_expr(parse_expr("u^3 - t"));
  BivariatePoly fu = d_du(f);
  CHECK(eval_at(fu, Rational(2), Rational(0)) == 12);  // 3u^2
  CHECK(eval_at(f, Rational(2), Rational(1)) == 7);
  CHECK(eval_at(f, rat("1/2"), rat("1/8")) == 0);
  CHECK(eval_at(d_du(bivariate_from_expr(parse_expr("t^2+1"))), Rational(5),
                Rational(3)) == 0);
}

TEST_CASE("eval_series substitutes a branch into F") {
  BivariatePoly f = bivariate_from_expr(parse_expr("u^2 - t^2 - 1"));
  TruncatedSeries u = ts({"1", "1"}, 4);  // u = 1 + T
  TruncatedSeries r = eval_series(f, u, 4);
  // (1+T)^2 - T^2 - 1 = 2T.
  CHECK(r.coeffs() == rats({"0", "2", "0", "0", "0"}));
  CHECK(error_code_of([&] { eval_series(f, u, 9); }) ==
        errc::insufficient_truncation);
}

TEST_CASE("expand_branch: hyperbola, line, cubic") {
  TruncatedSeries hyp = expand_branch(hyperbola_chart(), 7);
  CHECK(hyp.coeffs() == rats({"1", "0", "1/2", "0", "-1/8", "0", "1/16", "0"}));

  TruncatedSeries line = expand_branch(projective_line_chart(), 5);
  CHECK(line.coeffs() == rats({"0", "1", "0", "0", "0", "0"}));

  CurveChart cubic = make_chart("u^3 - 1 - t", "1", {});
  TruncatedSeries c = expand_branch(cubic, 3);
  CHECK(c.coeffs() == rats({"1", "1/3", "-1/9", "5/81"}));
  // Substituting back, the residual vanishes identically mod T^4.
  CHECK(eval_series(cubic.F, c, 3).is_zero());

  // Independent check: the coefficients of (1+T)^(1/3) by the generalized
  // binomial series.
  CHECK(c.coeffs() == oracles::binomial_series(rat("1/3"), 3));
}

TEST_CASE("expand_branch matches the binomial series deep") {
  TruncatedSeries u = expand_branch(hyperbola_chart(), 20);
  // u = (1 + T^2)^(1/2): even part of the binomial series in T^2.
  std::vector<Rational> half = oracles::binomial_series(rat("1/2"), 10);
  for (long k = 0; k <= 20; ++k) {
    if (k % 2 == 0) {
      CHECK(u[k] == half[static_cast<size_t>(k / 2)]);
    } else {
      CHECK(u[k] == 0);
    }
  }
}

TEST_CASE("expand_branch rejects bad charts") {
  CHECK(error_code_of([] {
          expand_branch(make_chart("u^2 - t^2 - 1", "2", {}), 4);
        }) == errc::not_on_curve);
  CHECK(error_code_of([] {
          expand_branch(make_chart("u^2 - t", "0", {}), 4);
        }) == errc::degenerate_branch);
  CHECK(error_code_of([] {
          make_chart("u^2 - t^2 - 1", "1", {{"x", "1/w"}});
        }) == errc::invalid_chart);
}

TEST_CASE("Newton iterates double the residual valuation") {
  CurveChart chart = make_chart("u^3 - 1 - t", "1", {});
  long N = 25;
  std::vector<TruncatedSeries> steps = expand_branch_steps(chart, N);
  REQUIRE(steps.size() >= 3);
  long expected = 1;
  for (size_t k = 0; k < steps.size(); ++k) {
    // Step k is correct mod T^expected, so its residual vanishes through its
    // whole stored truncation expected-1.
    CHECK(steps[k].truncation() == expected - 1);
    CHECK(eval_series(chart.F, steps[k], steps[k].truncation()).is_zero());
    expected = std::min(2 * expected, N + 1);
  }
  CHECK(steps.back().truncation() == N);
}

TEST_CASE("sharp_embed: hyperbola coordinates") {
  CurveChart chart = hyperbola_chart();

  LaurentSeries y = sharp_embed("y", chart, 8);
  CHECK(y.ord() == -1);
  CHECK(y.coefficient(-1) == 1);
  CHECK(y.coefficient(0) == 0);
  CHECK(y.coefficient(1) == rat("1/2"));
  CHECK(y.coefficient(3) == rat("-1/8"));
  CHECK(y.coefficient(5) == rat("1/16"));

  // y*(x+y)^0 is just y again.
  CHECK(agree(sharp_embed("y*(x+y)^0", chart, 8), y));

  LaurentSeries x = sharp_embed("x", chart, 8);
  CHECK(x.ord() == -1);
  CHECK(x.exact());
  CHECK(x.coefficient(-1) == 1);
}

TEST_CASE("sharp_embed: free term 2^n at order -(n+1)") {
  CurveChart chart = hyperbola_chart();
  Rational twopow(1);
  for (long n = 0; n <= 5; ++n) {
    std::string expr = "y*(x+y)^" + std::to_string(n);
    LaurentSeries s = sharp_embed(expr, chart, 12);
    CAPTURE(n);
    CHECK(s.ord() == -(n + 1));
    CHECK(s.coefficient(-(n + 1)) == twopow);
    CHECK(s.known_through() == 12);
    twopow *= 2;
  }
}

TEST_CASE("sharp_embed degenerates to the classical substitution") {
  CurveChart chart = projective_line_chart();
  LaurentSeries s = sharp_embed("2*s^2+3*s+5", chart, 6);
  CHECK(s.ord() == -2);
  CHECK(s.exact());
  CHECK(s.coefficient(-2) == 2);
  CHECK(s.coefficient(-1) == 3);
  CHECK(s.coefficient(0) == 5);

  LaurentSeries p = sharp_embed("s^3", chart, 6);
  CHECK(p.ord() == -3);
  CHECK(p.coefficient(-3) == 1);
}

TEST_CASE("sharp_embed error taxonomy") {
  CurveChart chart = hyperbola_chart();
  CHECK(error_code_of([&] { sharp_embed("z+1", chart, 6); }) ==
        errc::unknown_variable);
  // x is exactly representable, so x - x is provably zero.
  CHECK(error_code_of([&] { sharp_embed("1/(x - x)", chart, 6); }) ==
        errc::zero_division);
  // y is only known to finite precision; y - y vanishes to precision and
  // widening the window never resolves it.
  CHECK(error_code_of([&] { sharp_embed("1/(y - y)", chart, 6); }) ==
        errc::precision_exhausted);

  // Honest zero results are returned, not errors.
  CHECK(sharp_embed("x - x", chart, 6).identically_zero());
  LaurentSeries fuzzy = sharp_embed("y - y", chart, 6);
  CHECK(fuzzy.is_zero());
  CHECK(!fuzzy.identically_zero());
  CHECK(fuzzy.known_through() >= 6);
}

TEST_CASE("sharp_embed survives cancellation via retry") {
  CurveChart chart = hyperbola_chart();
  // y^2 - x^2 = 1 on the curve: the T^-2 terms cancel exactly.
  LaurentSeries rel = sharp_embed("y^2 - x^2", chart, 10);
  CHECK(rel.coefficient(0) == 1);
  for (long k = rel.ord(); k <= rel.known_through(); ++k) {
    if (k != 0) CHECK(rel.coefficient(k) == 0);
  }
  // Dividing by it is division by 1.
  LaurentSeries inv = sharp_embed("y/(y^2 - x^2)", chart, 8);
  CHECK(agree(inv, sharp_embed("y", chart, 8)));
}

TEST_CASE("sharp_embed is a ring homomorphism on random expressions") {
  CurveChart chart = hyperbola_chart();
  oracles::Rng rng(2718281);
  long N = 8;
  for (int i = 0; i < 30; ++i) {
    std::string e1 = rng.expr({"x", "y"}, 2);
    std::string e2 = rng.expr({"x", "y"}, 2);
    CAPTURE(e1);
    CAPTURE(e2);
    LaurentSeries a = sharp_embed(e1, chart, N);
    LaurentSeries b = sharp_embed(e2, chart, N);
    LaurentSeries prod = sharp_embed("(" + e1 + ")*(" + e2 + ")", chart, N);
    LaurentSeries sum = sharp_embed("(" + e1 + ")+(" + e2 + ")", chart, N);
    CHECK(agree(prod, a * b));
    CHECK(agree(sum, a + b));
  }
}
