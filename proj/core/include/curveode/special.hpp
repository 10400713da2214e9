#pragma once

#include <string>
#include <vector>

#include "curveode/diffop.hpp"
#include "curveode/series.hpp"

namespace curveode {

// sqrt(1 + T^2) through degree N.
TruncatedSeries sqrt_one_plus_tsq(long N);

// 1/sqrt(1 + T^2) from the closed form
//   Sigma: (-1)^k (2k)! / (4^k (k!)^2) T^(2k),
// independent of the Newton-iteration route.
TruncatedSeries inv_sqrt_series(long N);

// g_n = T^n / (sqrt(1+T^2) (1 + sqrt(1+T^2))^n) through degree N.
TruncatedSeries bessel_generator(long n, long N);

// T^(-(n+1)) sqrt(1+T^2) (1 + sqrt(1+T^2))^n, known through degree N; the
// symbol whose kernel equation has degree n+1.
LaurentSeries bessel_symbol(long n, long N);

DiffOperator bessel_operator(long n, long N);

// J_n = E(g_n): first n derivatives vanish, the n-th is 1/2^n.
SeriesFunction bessel_series(long n, long N);

// k-th derivative at 0 of the classical ascending series
//   Sigma_j (-1)^j (xi/2)^(2j+n) / (j! (j+n)!),
// i.e. h_k = k! (-1)^j / (j!(j+n)! 2^(2j+n)) when k = n+2j, else 0.
Rational bessel_ascending_h(long n, long k);

// L_n = E((1-T)^n), an exact polynomial model.
SeriesFunction laguerre(long n);

// 2 J'_n = J_(n-1) - J_(n+1), checked exactly at the Taylor-model level and
// independently at the generator level 2 T^(-1) g_n = g_(n-1) - g_(n+1).
bool verify_recurrence(long n, long N);

// [J_n, D J_n, ..., D^n J_n]; requires N >= 2n so that independence of the
// leading (n+1) derivatives is decidable.
std::vector<SeriesFunction> fundamental_system(long n, long N);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyReport {
  long n_max;
  long truncation;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

// The full verification suite over the Bessel family: golden coefficients,
// the closed-form reciprocal square root, the derivative recurrence, the
// fundamental systems with exact residuals and rank, the initial-value
// reconstruction, and the ascending-series cross-check.  With `perturb` set,
// one coefficient of J_0 is deliberately corrupted so the golden check must
// fail (a negative control for the harness itself).
VerifyReport verify_bessel_suite(long n_max, long N, bool perturb = false);

}  // namespace curveode
