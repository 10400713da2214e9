#include "curveode/special.hpp"

#include <algorithm>

#include "curveode/error.hpp"
#include "curveode/linalg.hpp"

namespace curveode {

namespace {

Rational inv_pow2(long n) {
  Integer d = Integer(1) << static_cast<unsigned long>(n);
  return Rational(Integer(1), d);
}

}  // namespace

TruncatedSeries sqrt_one_plus_tsq(long N) {
  std::vector<Rational> c(static_cast<size_t>(N) + 1, Rational(0));
  c[0] = 1;
  if (N >= 2) c[2] = 1;
  return sqrt(TruncatedSeries(std::move(c), N, false), N);
}

TruncatedSeries inv_sqrt_series(long N) {
  std::vector<Rational> c(static_cast<size_t>(N) + 1, Rational(0));
  for (long k = 0; 2 * k <= N; ++k) {
    Integer num = factorial(static_cast<unsigned long>(2 * k));
    Integer fk = factorial(static_cast<unsigned long>(k));
    Integer den = (Integer(1) << static_cast<unsigned long>(2 * k)) * fk * fk;
    Rational coeff(num, den);
    coeff.canonicalize();
    c[static_cast<size_t>(2 * k)] = (k % 2 == 0) ? coeff : -coeff;
  }
  return TruncatedSeries(std::move(c), N, false);
}

TruncatedSeries bessel_generator(long n, long N) {
  if (n < 0) fail(errc::invalid_argument, "generator index must be non-negative");
  TruncatedSeries s = sqrt_one_plus_tsq(N);
  TruncatedSeries denom =
      mul(s, power(add(TruncatedSeries::polynomial({Rational(1)}), s), n));
  return shift_up(invert(denom, N), n).truncated(N);
}

LaurentSeries bessel_symbol(long n, long N) {
  if (n < 0) fail(errc::invalid_argument, "symbol index must be non-negative");
  long body_trunc = N + n + 1;
  TruncatedSeries s = sqrt_one_plus_tsq(body_trunc);
  TruncatedSeries body =
      mul(s, power(add(TruncatedSeries::polynomial({Rational(1)}), s), n));
  return LaurentSeries(-(n + 1), body);
}

DiffOperator bessel_operator(long n, long N) {
  return DiffOperator(bessel_symbol(n, N));
}

SeriesFunction bessel_series(long n, long N) {
  return e_transform(bessel_generator(n, N));
}

Rational bessel_ascending_h(long n, long k) {
  if (k < n || (k - n) % 2 != 0) return Rational(0);
  long j = (k - n) / 2;
  Integer den = factorial(static_cast<unsigned long>(j)) *
                factorial(static_cast<unsigned long>(j + n)) *
                (Integer(1) << static_cast<unsigned long>(2 * j + n));
  Rational h(factorial(static_cast<unsigned long>(k)), den);
  h.canonicalize();
  return (j % 2 == 0) ? h : -h;
}

SeriesFunction laguerre(long n) {
  if (n < 0) fail(errc::invalid_argument, "Laguerre index must be non-negative");
  return e_transform(
      power(TruncatedSeries::polynomial({Rational(1), Rational(-1)}), n));
}

bool verify_recurrence(long n, long N) {
  if (n < 1) fail(errc::invalid_argument, "recurrence needs n >= 1");
  if (N < 1) fail(errc::insufficient_truncation, "recurrence needs N >= 1");
  SeriesFunction below = bessel_series(n - 1, N);
  SeriesFunction here = bessel_series(n, N);
  SeriesFunction above = bessel_series(n + 1, N);
  bool taylor_level = equal_mod(scale(Rational(2), shift(here.h)),
                                sub(below.h, above.h), N - 1);
  TruncatedSeries g_below = bessel_generator(n - 1, N);
  TruncatedSeries g_here = bessel_generator(n, N);
  TruncatedSeries g_above = bessel_generator(n + 1, N);
  bool generator_level = equal_mod(scale(Rational(2), g_here.drop_front(1)),
                                   sub(g_below, g_above), N - 1);
  return taylor_level && generator_level;
}

std::vector<SeriesFunction> fundamental_system(long n, long N) {
  if (n < 0) fail(errc::invalid_argument, "system index must be non-negative");
  if (N < 2 * n) {
    fail(errc::insufficient_truncation,
         "independence of " + std::to_string(n + 1) +
             " derivatives needs truncation >= " + std::to_string(2 * n));
  }
  std::vector<SeriesFunction> out;
  out.reserve(static_cast<size_t>(n) + 1);
  out.push_back(bessel_series(n, N));
  for (long k = 0; k < n; ++k) out.push_back(derivative(out.back()));
  return out;
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

bool matches_ascending(const TruncatedSeries& h, long n, long N, std::string& detail) {
  for (long k = 0; k <= N; ++k) {
    if (h.at(k) != bessel_ascending_h(n, k)) {
      detail = "coefficient mismatch at k=" + std::to_string(k) + ": got " +
               to_string(h.at(k)) + ", expected " +
               to_string(bessel_ascending_h(n, k));
      return false;
    }
  }
  detail = "all " + std::to_string(N + 1) + " derivatives exact";
  return true;
}

}  // namespace

VerifyReport verify_bessel_suite(long n_max, long N, bool perturb) {
  if (n_max < 0) fail(errc::invalid_argument, "n_max must be non-negative");
  if (N < 2 * n_max + 2) {
    fail(errc::insufficient_truncation,
         "suite at n_max=" + std::to_string(n_max) +
             " needs truncation >= " + std::to_string(2 * n_max + 2));
  }
  VerifyReport rep{n_max, N, {}};
  auto run = [&rep](const std::string& name, auto&& body) {
    CheckResult r{name, false, ""};
    try {
      r.pass = body(r.detail);
    } catch (const Error& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    rep.checks.push_back(std::move(r));
  };

  run("bessel_j0_golden", [&](std::string& d) {
    TruncatedSeries h = bessel_series(0, N).h;
    if (perturb) {
      h = add(h, TruncatedSeries::monomial(Rational(1), std::min(2L, N), N));
    }
    const Rational lead[] = {Rational(1),      Rational(0), Rational(-1, 2),
                             Rational(0),      Rational(3, 8), Rational(0),
                             Rational(-5, 16)};
    for (long k = 0; k <= std::min(6L, N); ++k) {
      if (h.at(k) != lead[k]) {
        d = "printed value mismatch at k=" + std::to_string(k);
        return false;
      }
    }
    return matches_ascending(h, 0, N, d);
  });

  if (n_max >= 1) {
    run("bessel_j1_golden", [&](std::string& d) {
      TruncatedSeries h = bessel_series(1, N).h;
      const Rational lead[] = {Rational(0),     Rational(1, 2), Rational(0),
                               Rational(-3, 8), Rational(0),    Rational(5, 16)};
      for (long k = 0; k <= std::min(5L, N); ++k) {
        if (h.at(k) != lead[k]) {
          d = "printed value mismatch at k=" + std::to_string(k);
          return false;
        }
      }
      return matches_ascending(h, 1, N, d);
    });
  }

  run("inv_sqrt_closed_form", [&](std::string& d) {
    TruncatedSeries closed = inv_sqrt_series(N);
    if (!equal_mod(closed, invert(sqrt_one_plus_tsq(N), N), N)) {
      d = "closed form disagrees with Newton-route reciprocal";
      return false;
    }
    if (!equal_mod(closed, bessel_generator(0, N), N)) {
      d = "closed form disagrees with the n=0 generator";
      return false;
    }
    d = "closed form matches both computed routes";
    return true;
  });

  for (long n = 1; n <= n_max; ++n) {
    run("derivative_recurrence_n" + std::to_string(n),
        [&, n](std::string& d) {
          bool ok = verify_recurrence(n, N);
          d = ok ? "holds exactly at both levels" : "identity violated";
          return ok;
        });
  }

  for (long n = 0; n <= n_max; ++n) {
    run("fundamental_system_n" + std::to_string(n), [&, n](std::string& d) {
      std::vector<SeriesFunction> fs = fundamental_system(n, N);
      DiffOperator op = bessel_operator(n, N);
      for (size_t k = 0; k < fs.size(); ++k) {
        if (!apply(op, fs[k]).h.is_zero()) {
          d = "nonzero residual for derivative " + std::to_string(k);
          return false;
        }
      }
      std::vector<std::vector<Rational>> m;
      m.reserve(fs.size());
      for (const SeriesFunction& w : fs) {
        std::vector<Rational> row;
        for (long k = 0; k <= n; ++k) row.push_back(w.h.at(k));
        m.push_back(std::move(row));
      }
      long rank = exact_rank(std::move(m));
      if (rank != n + 1) {
        d = "rank " + std::to_string(rank) + ", expected " + std::to_string(n + 1);
        return false;
      }
      d = "residuals zero, rank " + std::to_string(rank);
      return true;
    });
  }

  for (long n = 0; n <= n_max; ++n) {
    run("ivp_reproduces_bessel_n" + std::to_string(n), [&, n](std::string& d) {
      std::vector<Rational> init(static_cast<size_t>(n) + 1, Rational(0));
      init.back() = inv_pow2(n);
      SeriesFunction w = solve_ivp(bessel_operator(n, N), init, N);
      bool ok = equal_mod(w.h, bessel_series(n, N).h, N);
      d = ok ? "initial-value route reproduces the generator route"
             : "routes disagree";
      return ok;
    });
  }

  for (long n = 0; n <= n_max; ++n) {
    run("ascending_series_n" + std::to_string(n), [&, n](std::string& d) {
      return matches_ascending(bessel_series(n, N).h, n, N, d);
    });
  }

  return rep;
}

}  // namespace curveode
