#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace curveode {

// Exact rational scalar. GMP keeps canonical form (lowest terms,
// positive denominator), which the series layer relies on: no rounding
// ever happens on these values.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" (optional leading '-'); canonicalizes the result.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

// Round-to-nearest double conversion. mpq_get_d alone truncates toward
// zero, so the result is nudged to whichever neighbor is closest.
double to_double_nearest(const Rational& q);

// Exact square root of a non-negative rational, when one exists.
std::optional<Rational> exact_sqrt(const Rational& q);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace curveode
