#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "curveode/rational.hpp"

namespace curveode {

// Sentinel truncation meaning "every coefficient is known" (exact polynomial).
inline constexpr long kKnownAll = LONG_MAX;

// A power series in T known through degree `truncation()`:
//     a_0 + a_1 T + ... + a_N T^N + O(T^{N+1}).
//
// When `exact()` is set the object is a genuine polynomial: coefficients
// beyond the stored ones are zero, not unknown, and the model survives
// arithmetic without losing information.  Binary operations on inexact
// operands keep the minimum of the two knowledge horizons.
class TruncatedSeries {
 public:
  TruncatedSeries() : trunc_(0), coeffs_{Rational(0)} {}

  TruncatedSeries(std::vector<Rational> coeffs, long truncation, bool exact = false);

  static TruncatedSeries zero(long truncation);
  static TruncatedSeries one(long truncation);
  static TruncatedSeries constant(const Rational& c, long truncation);
  // c * T^k, known through `truncation`.
  static TruncatedSeries monomial(const Rational& c, long k, long truncation);
  // Exact polynomial with the given coefficients (trailing zeros trimmed).
  static TruncatedSeries polynomial(std::vector<Rational> coeffs);

  long truncation() const { return trunc_; }
  bool exact() const { return exact_; }
  // Index through which coefficients carry information: kKnownAll for exact
  // polynomials, truncation() otherwise.
  long known_through() const { return exact_ ? kKnownAll : trunc_; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Coefficient of T^k.  For exact models any k is fine (beyond the stored
  // range the value is zero); otherwise k must not exceed truncation().
  const Rational& operator[](long k) const;
  // Like operator[] but returns zero instead of failing above the horizon.
  Rational at(long k) const;

  // True when every *stored* coefficient vanishes (zero to this precision).
  bool is_zero() const;
  // True only for the exact zero polynomial.
  bool identically_zero() const { return exact_ && is_zero(); }

  // Smallest k with nonzero coefficient, or nullopt if none stored.
  std::optional<long> low_index() const;

  // Restrict knowledge to degree n (n <= truncation unless exact).
  TruncatedSeries truncated(long n) const;
  // Divide by T^k assuming the first k coefficients vanish.
  TruncatedSeries drop_front(long k) const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  long trunc_;
  bool exact_ = false;
  std::vector<Rational> coeffs_;  // size trunc_+1 (exact: any size >= 1)
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const Rational& c, const TruncatedSeries& a);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// a^e for e >= 0 (exact polynomial inputs stay exact).
TruncatedSeries power(const TruncatedSeries& a, long e);

// Multiplicative inverse.  Requires a nonzero free term; the result is capped
// at `target` when given (otherwise the operand's truncation, which must be
// finite).
TruncatedSeries invert(const TruncatedSeries& a, long target = -1);

// Square root with the positive branch of the free term, via Newton iteration.
// Requires the free term to be a positive rational square.
TruncatedSeries sqrt(const TruncatedSeries& a, long target = -1);

// sigma: drop the free term and shift down (coefficient k of the result is
// coefficient k+1 of the input); the knowledge horizon drops by one.
TruncatedSeries shift(const TruncatedSeries& a);

// Multiply by T^m (m >= 0): shifts coefficients up, horizon up by m.
TruncatedSeries shift_up(const TruncatedSeries& a, long m = 1);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) { return scale(c, a); }

// True when the two models agree on every index both actually know.
bool agree(const TruncatedSeries& a, const TruncatedSeries& b);
// True when the models agree through degree n (both must know that far).
bool equal_mod(const TruncatedSeries& a, const TruncatedSeries& b, long n);

std::string to_string(const TruncatedSeries& s, const std::string& var = "T");

// A Laurent series ord + Sigma: c_k T^{ord+k}, stored as a leading order and a
// TruncatedSeries body whose free term is nonzero (normalized) unless the
// whole thing is zero.  Normalization never moves the absolute knowledge
// horizon ord() + body().truncation().
class LaurentSeries {
 public:
  LaurentSeries() : ord_(0) {}
  LaurentSeries(long ord, TruncatedSeries body);

  static LaurentSeries zero(long truncation);        // zero to precision
  static LaurentSeries exact_zero();                 // the zero element
  static LaurentSeries one(long truncation);
  static LaurentSeries from_series(const TruncatedSeries& s) { return LaurentSeries(0, s); }
  static LaurentSeries monomial(const Rational& c, long k, long truncation);

  const TruncatedSeries& body() const { return body_; }
  // Exponent of the leading stored term (meaningful when not is_zero()).
  long ord() const { return ord_; }
  bool exact() const { return body_.exact(); }

  // Largest exponent about which this model says anything.
  long known_through() const;

  // Coefficient of T^k for any integer k within knowledge.
  Rational coefficient(long k) const;

  bool is_zero() const { return body_.is_zero(); }
  bool identically_zero() const { return body_.identically_zero(); }

  // Order of vanishing.  Exact zero has no order (nullopt); a fuzzy zero
  // (vanishes to precision but not provably) raises IndeterminateOrder.
  std::optional<long> order() const;

  // Restrict absolute knowledge horizon to n.
  LaurentSeries truncated_at(long n) const;

  // The regular (ord >= 0) part as a TruncatedSeries, or fail if ord < 0.
  TruncatedSeries regular_part() const;

  bool operator==(const LaurentSeries&) const = default;

 private:
  long ord_;
  TruncatedSeries body_;
};

LaurentSeries laurent_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries laurent_sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries laurent_negate(const LaurentSeries& a);
LaurentSeries laurent_scale(const Rational& c, const LaurentSeries& a);
LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b);

// Inverse of a Laurent series with provably nonzero leading term.  Fails with
// ZeroDivision on exact zero and IndeterminateOrder on fuzzy zero.  `cap`
// bounds the result's absolute horizon when the operand is exact.
LaurentSeries laurent_invert(const LaurentSeries& a, long cap = -1);

// Integer power (negative allowed via inversion).  `work_trunc` caps the
// horizon for exact bases raised to negative powers.
LaurentSeries laurent_pow(const LaurentSeries& a, long e, long work_trunc = -1);

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return laurent_add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return laurent_sub(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a) { return laurent_negate(a); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return laurent_mul(a, b); }
inline LaurentSeries operator*(const Rational& c, const LaurentSeries& a) { return laurent_scale(c, a); }

bool agree(const LaurentSeries& a, const LaurentSeries& b);

std::string to_string(const LaurentSeries& s, const std::string& var = "T");

}  // namespace curveode
