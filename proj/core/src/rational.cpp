#include "curveode/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "curveode/error.hpp"

namespace curveode {

namespace {

bool valid_integer_token(const std::string& s, size_t begin, size_t end) {
  if (begin >= end) return false;
  size_t i = begin;
  if (s[i] == '-') ++i;
  if (i >= end) return false;
  for (; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  bool ok = (slash == std::string::npos)
                ? valid_integer_token(text, 0, text.size())
                : valid_integer_token(text, 0, slash) &&
                      valid_integer_token(text, slash + 1, text.size());
  if (!ok) fail(errc::syntax_error, "malformed rational literal '" + text + "'");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    fail(errc::syntax_error, "malformed rational literal '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    fail(errc::zero_division, "rational literal with zero denominator '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double_nearest(const Rational& q) {
  double d = mpq_get_d(q.get_mpq_t());
  if (!std::isfinite(d)) return d;
  double best = d;
  Rational best_err(abs(q - Rational(d)));
  const double inf = std::numeric_limits<double>::infinity();
  for (double cand : {std::nextafter(d, inf), std::nextafter(d, -inf)}) {
    if (!std::isfinite(cand)) continue;
    Rational err(abs(q - Rational(cand)));
    if (err < best_err) {
      best = cand;
      best_err = err;
    }
  }
  return best;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Integer root_num, root_den;
  mpz_sqrt(root_num.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(root_den.get_mpz_t(), den.get_mpz_t());
  // num and den are coprime, so their roots are as well.
  return Rational(root_num, root_den);
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace curveode
