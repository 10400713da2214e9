#include <doctest.h>

#include <algorithm>
#include <string>

#include "curveode/curve.hpp"
#include "curveode/linalg.hpp"
#include "curveode/special.hpp"
#include "oracles.hpp"
#include "testing.hpp"

using namespace curveode;
using testutil::error_code_of;
using testutil::rat;
using testutil::rats;

TEST_CASE("inv_sqrt_series: closed form vs Newton route") {
  long N = 24;
  TruncatedSeries closed = inv_sqrt_series(N);
  CHECK(closed.at(0) == 1);
  CHECK(closed.at(2) == rat("-1/2"));
  CHECK(closed.at(4) == rat("3/8"));
  CHECK(closed.at(6) == rat("-5/16"));
  for (long k = 1; k <= N; k += 2) CHECK(closed.at(k) == 0);

  TruncatedSeries newton = invert(sqrt_one_plus_tsq(N), N);
  CHECK(closed.coeffs() == newton.coeffs());

  // Reciprocal: product with sqrt(1+T^2) is 1.
  TruncatedSeries prod = mul(closed, sqrt_one_plus_tsq(N));
  CHECK(prod.at(0) == 1);
  for (long k = 1; k <= N; ++k) CHECK(prod.at(k) == 0);

  // And the binomial-series oracle for (1+x)^(-1/2) at x = T^2.
  std::vector<Rational> half = oracles::binomial_series(rat("-1/2"), N / 2);
  for (long k = 0; 2 * k <= N; ++k) {
    CHECK(closed.at(2 * k) == half[static_cast<size_t>(k)]);
  }
}

TEST_CASE("bessel_series: golden leading coefficients") {
  TruncatedSeries j0 = bessel_series(0, 12).h;
  CHECK(j0.at(0) == 1);
  CHECK(j0.at(2) == rat("-1/2"));
  CHECK(j0.at(4) == rat("3/8"));
  CHECK(j0.at(6) == rat("-5/16"));
  CHECK(j0.at(1) == 0);
  CHECK(j0.at(3) == 0);

  TruncatedSeries j1 = bessel_series(1, 12).h;
  CHECK(j1.at(0) == 0);
  CHECK(j1.at(1) == rat("1/2"));
  CHECK(j1.at(3) == rat("-3/8"));
  CHECK(j1.at(5) == rat("5/16"));
  CHECK(j1.at(2) == 0);
  CHECK(j1.at(4) == 0);

  // J_0 is the E-transform of the closed-form reciprocal square root.
  CHECK(j0.coeffs() == inv_sqrt_series(12).coeffs());
}

TEST_CASE("bessel_series: leading derivatives are 0,...,0,1/2^n") {
  for (long n = 0; n <= 6; ++n) {
    TruncatedSeries h = bessel_series(n, 20).h;
    CAPTURE(n);
    for (long k = 0; k < n; ++k) CHECK(h.at(k) == 0);
    CHECK(h.at(n) == Rational(Integer(1), Integer(1) << static_cast<unsigned long>(n)));
  }
}

TEST_CASE("bessel_series matches the independent ascending-series oracle") {
  for (long n = 0; n <= 8; ++n) {
    TruncatedSeries h = bessel_series(n, 16).h;
    for (long k = 0; k <= 15; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      Rational kfact(oracles::fact(k));
      CHECK(h.at(k) == oracles::bessel_xi_coeff(n, k) * kfact);
      CHECK(bessel_ascending_h(n, k) == oracles::bessel_xi_coeff(n, k) * kfact);
    }
  }
}

TEST_CASE("generator parity: g_n is even or odd with n") {
  for (long n = 0; n <= 5; ++n) {
    TruncatedSeries g = bessel_generator(n, 15);
    for (long k = 0; k <= 15; ++k) {
      if ((k - n) % 2 != 0) {
        CAPTURE(n);
        CAPTURE(k);
        CHECK(g.at(k) == 0);
      }
    }
  }
}

TEST_CASE("bessel_symbol: order, free term, and the generator pairing") {
  for (long n = 0; n <= 5; ++n) {
    long N = 12;
    LaurentSeries phi = bessel_symbol(n, N);
    CAPTURE(n);
    CHECK(phi.ord() == -(n + 1));
    CHECK(phi.coefficient(-(n + 1)) ==
          Rational(Integer(1) << static_cast<unsigned long>(n)));
    CHECK(phi.known_through() >= N);

    // phi * g_n = 1/T by construction.
    LaurentSeries prod =
        phi * LaurentSeries::from_series(bessel_generator(n, N));
    CHECK(prod.ord() == -1);
    CHECK(prod.coefficient(-1) == 1);
    for (long k = 0; k <= prod.known_through(); ++k) {
      CHECK(prod.coefficient(k) == 0);
    }
  }
}

TEST_CASE("bessel_symbol agrees with the curve-embedding route") {
  CurveChart chart = hyperbola_chart();
  for (long n = 0; n <= 4; ++n) {
    LaurentSeries direct = bessel_symbol(n, 10);
    LaurentSeries embedded =
        sharp_embed("y*(x+y)^" + std::to_string(n), chart, 10);
    CAPTURE(n);
    CHECK(agree(direct, embedded));
  }
}

TEST_CASE("bessel_operator annihilates its own family") {
  for (long n = 0; n <= 5; ++n) {
    long N = 18;
    DiffOperator op = bessel_operator(n, N);
    CAPTURE(n);
    CHECK(op.degree() == n + 1);
    SeriesFunction residual = apply(op, bessel_series(n, N));
    CHECK(residual.h.is_zero());
  }
}

TEST_CASE("derivative recurrence holds at both levels") {
  CHECK(verify_recurrence(1, 20));
  CHECK(verify_recurrence(5, 40));
  for (long n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(verify_recurrence(n, 24));
  }
  CHECK(error_code_of([] { verify_recurrence(0, 10); }) ==
        errc::invalid_argument);
}

TEST_CASE("fundamental_system: shape, initial values, rank, residuals") {
  std::vector<SeriesFunction> f0 = fundamental_system(0, 10);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0].h.coeffs() == bessel_series(0, 10).h.coeffs());

  std::vector<SeriesFunction> f1 = fundamental_system(1, 12);
  REQUIRE(f1.size() == 2);
  // D J_1 starts with values (1/2, 0).
  CHECK(f1[1].h.at(0) == rat("1/2"));
  CHECK(f1[1].h.at(1) == 0);

  long n = 2, N = 16;
  std::vector<SeriesFunction> fs = fundamental_system(n, N);
  REQUIRE(fs.size() == 3);
  DiffOperator op = bessel_operator(n, N);
  std::vector<std::vector<Rational>> lead;
  for (const SeriesFunction& w : fs) {
    CHECK(apply(op, w).h.is_zero());
    std::vector<Rational> row;
    for (long k = 0; k <= n; ++k) row.push_back(w.h.at(k));
    lead.push_back(std::move(row));
  }
  CHECK(exact_rank(lead) == n + 1);

  CHECK(error_code_of([] { fundamental_system(3, 4); }) ==
        errc::insufficient_truncation);
}

TEST_CASE("laguerre: goldens and the sum-formula oracle") {
  CHECK(laguerre(0).h == TruncatedSeries::polynomial({Rational(1)}));
  CHECK(laguerre(1).h.coeffs() == rats({"1", "-1"}));
  CHECK(laguerre(2).h.coeffs() == rats({"1", "-2", "1"}));
  for (long n = 0; n <= 10; ++n) {
    SeriesFunction L = laguerre(n);
    CHECK(L.h.exact());
    std::vector<Rational> xi = oracles::laguerre_xi(n);
    for (long k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(L.h.at(k) == xi[static_cast<size_t>(k)] * Rational(oracles::fact(k)));
    }
  }
}

TEST_CASE("laguerre equals the curve-route solution basis") {
  CurveChart chart = projective_line_chart();
  long N = 14;
  for (long n = 0; n <= 10; ++n) {
    std::string expr =
        "s^" + std::to_string(n + 1) + "/(s-1)^" + std::to_string(n);
    LaurentSeries phi = sharp_embed(expr, chart, N);
    DiffOperator op(phi);
    CAPTURE(n);
    REQUIRE(op.degree() == 1);
    std::vector<SeriesFunction> basis = solve(op, N);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].h.at(0) == 1);  // already normalized to value 1 at 0
    CHECK(agree(basis[0].h, laguerre(n).h));
  }
}

TEST_CASE("verify suite: all checks pass and are named") {
  VerifyReport rep = verify_bessel_suite(2, 14);
  CHECK(rep.n_max == 2);
  CHECK(rep.truncation == 14);
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() == 14);
  std::vector<std::string> names;
  for (const CheckResult& c : rep.checks) names.push_back(c.name);
  for (const char* expected :
       {"bessel_j0_golden", "bessel_j1_golden", "inv_sqrt_closed_form",
        "derivative_recurrence_n1", "derivative_recurrence_n2",
        "fundamental_system_n0", "fundamental_system_n2",
        "ivp_reproduces_bessel_n1", "ascending_series_n2"}) {
    CAPTURE(expected);
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
  }
}

TEST_CASE("verify suite: perturbation is caught by the golden check") {
  VerifyReport rep = verify_bessel_suite(1, 10, true);
  CHECK(!rep.all_pass());
  for (const CheckResult& c : rep.checks) {
    if (c.name == "bessel_j0_golden") {
      CHECK(!c.pass);
    } else {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("verify suite: n_max=0 runs the base checks only") {
  VerifyReport rep = verify_bessel_suite(0, 8);
  CHECK(rep.all_pass());
  for (const CheckResult& c : rep.checks) {
    CHECK(c.name.find("_n1") == std::string::npos);
    CHECK(c.name != "bessel_j1_golden");
  }
  CHECK(error_code_of([] { verify_bessel_suite(8, 10); }) ==
        errc::insufficient_truncation);
}
