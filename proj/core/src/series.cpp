#include "curveode/series.hpp"

#include <algorithm>
#include <sstream>

#include "curveode/error.hpp"

namespace curveode {

namespace {

const Rational kZero(0);

// Pad with zero coefficients up to truncation n (n >= current), keeping the
// inexact interpretation.  Used by Newton iterations that self-correct.
TruncatedSeries padded_raw(const TruncatedSeries& a, long n) {
  std::vector<Rational> c(a.coeffs());
  c.resize(static_cast<size_t>(n) + 1, Rational(0));
  return TruncatedSeries(std::move(c), n, false);
}

// Window of `a` through degree n as a plain inexact series; requires the
// coefficients that far to be known.
TruncatedSeries window(const TruncatedSeries& a, long n) {
  if (a.known_through() < n) {
    fail(errc::insufficient_truncation,
         "need coefficients through degree " + std::to_string(n));
  }
  std::vector<Rational> c;
  c.reserve(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) c.push_back(a.at(k));
  return TruncatedSeries(std::move(c), n, false);
}

long min_known(long a, long b) { return a < b ? a : b; }

void append_term(std::ostringstream& out, bool& first, const Rational& c,
                 long k, const std::string& var) {
  if (c == 0) return;
  Rational abs_c = abs(c);
  if (first) {
    if (sgn(c) < 0) out << "-";
    first = false;
  } else {
    out << (sgn(c) < 0 ? " - " : " + ");
  }
  if (k == 0) {
    out << to_string(abs_c);
  } else {
    if (abs_c != 1) out << to_string(abs_c) << "*";
    out << var;
    if (k != 1) out << "^" << k;
  }
}

std::string format_series(long start, const std::vector<Rational>& coeffs,
                          long horizon, bool exact, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    append_term(out, first, coeffs[i], start + static_cast<long>(i), var);
  }
  if (!exact) {
    if (!first) out << " + ";
    out << "O(" << var << "^" << horizon + 1 << ")";
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, long truncation,
                                 bool exact)
    : exact_(exact), coeffs_(std::move(coeffs)) {
  if (exact_) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Rational(0));
    trunc_ = static_cast<long>(coeffs_.size()) - 1;
    return;
  }
  if (truncation < 0) {
    fail(errc::invalid_argument, "series truncation must be non-negative");
  }
  trunc_ = truncation;
  coeffs_.resize(static_cast<size_t>(trunc_) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::zero(long truncation) {
  return TruncatedSeries({}, truncation, false);
}

TruncatedSeries TruncatedSeries::one(long truncation) {
  return constant(Rational(1), truncation);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, long truncation) {
  return TruncatedSeries({c}, truncation, false);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, long k, long truncation) {
  if (k < 0 || k > truncation) {
    fail(errc::invalid_argument, "monomial degree outside [0, truncation]");
  }
  std::vector<Rational> coeffs(static_cast<size_t>(k) + 1, Rational(0));
  coeffs[static_cast<size_t>(k)] = c;
  return TruncatedSeries(std::move(coeffs), truncation, false);
}

TruncatedSeries TruncatedSeries::polynomial(std::vector<Rational> coeffs) {
  return TruncatedSeries(std::move(coeffs), 0, true);
}

const Rational& TruncatedSeries::operator[](long k) const {
  if (k < 0) fail(errc::invalid_argument, "negative series index");
  if (k < static_cast<long>(coeffs_.size())) return coeffs_[static_cast<size_t>(k)];
  if (exact_) return kZero;
  fail(errc::insufficient_truncation,
       "coefficient " + std::to_string(k) + " beyond truncation " +
           std::to_string(trunc_));
}

Rational TruncatedSeries::at(long k) const {
  if (k < 0) return Rational(0);
  if (k < static_cast<long>(coeffs_.size())) return coeffs_[static_cast<size_t>(k)];
  if (exact_) return Rational(0);
  fail(errc::insufficient_truncation,
       "coefficient " + std::to_string(k) + " beyond truncation " +
           std::to_string(trunc_));
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

std::optional<long> TruncatedSeries::low_index() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<long>(i);
  }
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(long n) const {
  if (n < 0) fail(errc::invalid_argument, "series truncation must be non-negative");
  if (!exact_ && n > trunc_) {
    fail(errc::insufficient_truncation,
         "cannot extend knowledge from degree " + std::to_string(trunc_) +
             " to " + std::to_string(n));
  }
  std::vector<Rational> c;
  c.reserve(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) c.push_back(at(k));
  return TruncatedSeries(std::move(c), n, false);
}

TruncatedSeries TruncatedSeries::drop_front(long k) const {
  if (k < 0) fail(errc::invalid_argument, "drop_front needs k >= 0");
  for (long i = 0; i < k && i < static_cast<long>(coeffs_.size()); ++i) {
    if (coeffs_[static_cast<size_t>(i)] != 0) {
      fail(errc::invalid_argument, "drop_front over a nonzero coefficient");
    }
  }
  if (!exact_ && k > trunc_) {
    fail(errc::insufficient_truncation, "drop_front past the truncation");
  }
  std::vector<Rational> c;
  if (k < static_cast<long>(coeffs_.size())) {
    c.assign(coeffs_.begin() + k, coeffs_.end());
  }
  if (exact_) return polynomial(std::move(c));
  return TruncatedSeries(std::move(c), trunc_ - k, false);
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.exact() && b.exact()) {
    size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<Rational> c(n);
    for (size_t i = 0; i < n; ++i) {
      c[i] = a.at(static_cast<long>(i)) + b.at(static_cast<long>(i));
    }
    return TruncatedSeries::polynomial(std::move(c));
  }
  long n = min_known(a.known_through(), b.known_through());
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a.at(k) + b.at(k);
  return TruncatedSeries(std::move(c), n, false);
}

TruncatedSeries negate(const TruncatedSeries& a) {
  std::vector<Rational> c(a.coeffs());
  for (Rational& x : c) x = -x;
  return TruncatedSeries(std::move(c), a.truncation(), a.exact());
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add(a, negate(b));
}

TruncatedSeries scale(const Rational& c, const TruncatedSeries& a) {
  std::vector<Rational> out(a.coeffs());
  for (Rational& x : out) x *= c;
  return TruncatedSeries(std::move(out), a.truncation(), a.exact());
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.exact() && b.exact()) {
    size_t n = a.coeffs().size() + b.coeffs().size() - 1;
    std::vector<Rational> c(n, Rational(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
      if (a.coeffs()[i] == 0) continue;
      for (size_t j = 0; j < b.coeffs().size(); ++j) {
        c[i + j] += a.coeffs()[i] * b.coeffs()[j];
      }
    }
    return TruncatedSeries::polynomial(std::move(c));
  }
  long n = min_known(a.known_through(), b.known_through());
  std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
  for (long i = 0; i <= n; ++i) {
    Rational ai = a.at(i);
    if (ai == 0) continue;
    for (long j = 0; i + j <= n; ++j) {
      Rational bj = b.at(j);
      if (bj != 0) c[static_cast<size_t>(i + j)] += ai * bj;
    }
  }
  return TruncatedSeries(std::move(c), n, false);
}

TruncatedSeries power(const TruncatedSeries& a, long e) {
  if (e < 0) fail(errc::invalid_argument, "power needs a non-negative exponent");
  TruncatedSeries acc = TruncatedSeries::polynomial({Rational(1)});
  TruncatedSeries base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

TruncatedSeries invert(const TruncatedSeries& a, long target) {
  const Rational& a0 = a.at(0);
  if (a0 == 0) {
    fail(errc::zero_free_term, "cannot invert a series with zero free term");
  }
  if (target < 0) target = a.truncation();
  if (a.known_through() < target) {
    fail(errc::insufficient_truncation,
         "inversion to degree " + std::to_string(target) +
             " needs input known that far");
  }
  // Constant polynomials invert exactly.
  if (a.exact() && a.coeffs().size() == 1) {
    return TruncatedSeries::polynomial({1 / a0});
  }
  Rational inv0 = 1 / a0;
  std::vector<Rational> b(static_cast<size_t>(target) + 1);
  b[0] = inv0;
  for (long k = 1; k <= target; ++k) {
    Rational acc(0);
    for (long i = 1; i <= k; ++i) {
      Rational ai = a.at(i);
      if (ai != 0) acc += ai * b[static_cast<size_t>(k - i)];
    }
    b[static_cast<size_t>(k)] = -acc * inv0;
  }
  return TruncatedSeries(std::move(b), target, false);
}

TruncatedSeries sqrt(const TruncatedSeries& a, long target) {
  if (target < 0) target = a.truncation();
  if (a.known_through() < target) {
    fail(errc::insufficient_truncation,
         "square root to degree " + std::to_string(target) +
             " needs input known that far");
  }
  if (a.at(0) == 0) {
    fail(errc::zero_free_term, "square root of a series with zero free term");
  }
  std::optional<Rational> r0 = exact_sqrt(a.at(0));
  if (!r0) {
    fail(errc::non_square_free_term,
         "free term " + to_string(a.at(0)) + " has no rational square root");
  }
  TruncatedSeries s = TruncatedSeries::constant(*r0, 0);
  long p = 0;
  while (p < target) {
    long q = std::min(2 * p + 1, target);
    TruncatedSeries sp = padded_raw(s, q);
    s = scale(Rational(1, 2), add(sp, mul(window(a, q), invert(sp, q))));
    p = q;
  }
  return s;
}

TruncatedSeries shift(const TruncatedSeries& a) {
  if (a.exact()) {
    std::vector<Rational> c(a.coeffs().begin() + 1, a.coeffs().end());
    return TruncatedSeries::polynomial(std::move(c));
  }
  if (a.truncation() < 1) {
    fail(errc::insufficient_truncation,
         "shift needs at least one coefficient beyond the free term");
  }
  std::vector<Rational> c(a.coeffs().begin() + 1, a.coeffs().end());
  return TruncatedSeries(std::move(c), a.truncation() - 1, false);
}

TruncatedSeries shift_up(const TruncatedSeries& a, long m) {
  if (m < 0) fail(errc::invalid_argument, "shift_up needs m >= 0");
  std::vector<Rational> c(static_cast<size_t>(m), Rational(0));
  c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
  if (a.exact()) return TruncatedSeries::polynomial(std::move(c));
  return TruncatedSeries(std::move(c), a.truncation() + m, false);
}

bool agree(const TruncatedSeries& a, const TruncatedSeries& b) {
  long n = min_known(a.known_through(), b.known_through());
  if (n == kKnownAll) {
    n = static_cast<long>(std::max(a.coeffs().size(), b.coeffs().size())) - 1;
  }
  for (long k = 0; k <= n; ++k) {
    if (a.at(k) != b.at(k)) return false;
  }
  return true;
}

bool equal_mod(const TruncatedSeries& a, const TruncatedSeries& b, long n) {
  if (a.known_through() < n || b.known_through() < n) {
    fail(errc::insufficient_truncation,
         "comparison through degree " + std::to_string(n) +
             " exceeds what is known");
  }
  for (long k = 0; k <= n; ++k) {
    if (a.at(k) != b.at(k)) return false;
  }
  return true;
}

std::string to_string(const TruncatedSeries& s, const std::string& var) {
  return format_series(0, s.coeffs(), s.truncation(), s.exact(), var);
}

LaurentSeries::LaurentSeries(long ord, TruncatedSeries body)
    : ord_(ord), body_(std::move(body)) {
  std::optional<long> low = body_.low_index();
  if (!low) {
    if (body_.exact()) {
      ord_ = 0;
      body_ = TruncatedSeries::polynomial({Rational(0)});
    } else {
      ord_ = ord + body_.truncation();
      body_ = TruncatedSeries::zero(0);
    }
    return;
  }
  if (*low > 0) {
    ord_ += *low;
    body_ = body_.drop_front(*low);
  }
}

LaurentSeries LaurentSeries::zero(long truncation) {
  return LaurentSeries(truncation, TruncatedSeries::zero(0));
}

LaurentSeries LaurentSeries::exact_zero() {
  return LaurentSeries(0, TruncatedSeries::polynomial({Rational(0)}));
}

LaurentSeries LaurentSeries::one(long truncation) {
  return LaurentSeries(0, TruncatedSeries::one(truncation));
}

LaurentSeries LaurentSeries::monomial(const Rational& c, long k, long truncation) {
  if (c == 0) return zero(truncation);
  if (truncation < k) {
    fail(errc::invalid_argument, "monomial degree above the truncation");
  }
  return LaurentSeries(k, TruncatedSeries::constant(c, truncation - k));
}

long LaurentSeries::known_through() const {
  if (body_.exact()) return kKnownAll;
  return ord_ + body_.truncation();
}

Rational LaurentSeries::coefficient(long k) const {
  if (k > known_through()) {
    fail(errc::insufficient_truncation,
         "coefficient " + std::to_string(k) + " beyond knowledge horizon " +
             std::to_string(known_through()));
  }
  if (k < ord_) return Rational(0);
  return body_.at(k - ord_);
}

std::optional<long> LaurentSeries::order() const {
  if (identically_zero()) return std::nullopt;
  if (is_zero()) {
    fail(errc::indeterminate_order,
         "series vanishes to working precision; order cannot be determined");
  }
  return ord_;
}

LaurentSeries LaurentSeries::truncated_at(long n) const {
  if (known_through() <= n) return *this;
  if (exact()) {
    long top = ord_ + static_cast<long>(body_.coeffs().size()) - 1;
    if (top <= n) return *this;  // nothing above the cap to forget
  }
  if (n < ord_) return zero(n);
  return LaurentSeries(ord_, body_.truncated(n - ord_));
}

TruncatedSeries LaurentSeries::regular_part() const {
  if (identically_zero()) return TruncatedSeries::polynomial({Rational(0)});
  if (is_zero()) {
    long h = known_through();
    if (h < 0) {
      fail(errc::insufficient_truncation,
           "no non-negative coefficients are known");
    }
    return TruncatedSeries::zero(h);
  }
  if (ord_ < 0) {
    fail(errc::invalid_argument,
         "series has a pole of order " + std::to_string(-ord_) +
             "; no regular part");
  }
  return shift_up(body_, ord_);
}

LaurentSeries laurent_add(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.identically_zero()) return b;
  if (b.identically_zero()) return a;
  long lo = std::min(a.ord(), b.ord());
  if (a.exact() && b.exact()) {
    long hi = std::max(a.ord() + static_cast<long>(a.body().coeffs().size()),
                       b.ord() + static_cast<long>(b.body().coeffs().size())) - 1;
    std::vector<Rational> c(static_cast<size_t>(hi - lo) + 1, Rational(0));
    for (long k = lo; k <= hi; ++k) {
      c[static_cast<size_t>(k - lo)] = a.coefficient(k) + b.coefficient(k);
    }
    return LaurentSeries(lo, TruncatedSeries(std::move(c), 0, true));
  }
  long h = min_known(a.known_through(), b.known_through());
  std::vector<Rational> c(static_cast<size_t>(h - lo) + 1, Rational(0));
  for (long k = lo; k <= h; ++k) {
    c[static_cast<size_t>(k - lo)] = a.coefficient(k) + b.coefficient(k);
  }
  return LaurentSeries(lo, TruncatedSeries(std::move(c), h - lo, false));
}

LaurentSeries laurent_negate(const LaurentSeries& a) {
  return LaurentSeries(a.ord(), negate(a.body()));
}

LaurentSeries laurent_sub(const LaurentSeries& a, const LaurentSeries& b) {
  return laurent_add(a, laurent_negate(b));
}

LaurentSeries laurent_scale(const Rational& c, const LaurentSeries& a) {
  if (c == 0) return LaurentSeries::exact_zero();
  return LaurentSeries(a.ord(), scale(c, a.body()));
}

LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.identically_zero() || b.identically_zero()) {
    return LaurentSeries::exact_zero();
  }
  return LaurentSeries(a.ord() + b.ord(), mul(a.body(), b.body()));
}

LaurentSeries laurent_invert(const LaurentSeries& a, long cap) {
  if (a.identically_zero()) {
    fail(errc::zero_division, "division by the zero series");
  }
  if (a.is_zero()) {
    fail(errc::indeterminate_order,
         "division by a series that vanishes to working precision");
  }
  long rt;
  if (cap >= 0 || !a.exact()) {
    if (cap < 0) {
      rt = a.body().truncation();
    } else {
      rt = cap + a.ord();
      if (rt < 0) {
        fail(errc::insufficient_truncation,
             "inverse starts at degree " + std::to_string(-a.ord()) +
                 ", above the requested horizon");
      }
      // An inexact operand can only support an inverse as deep as it is
      // known itself; the horizon shrinks honestly instead of failing.
      if (!a.exact()) rt = std::min(rt, a.body().truncation());
    }
  } else {
    rt = static_cast<long>(a.body().coeffs().size()) - 1;
  }
  return LaurentSeries(-a.ord(), invert(a.body(), rt));
}

LaurentSeries laurent_pow(const LaurentSeries& a, long e, long work_trunc) {
  if (e == 0) {
    return LaurentSeries::from_series(TruncatedSeries::polynomial({Rational(1)}));
  }
  LaurentSeries base = a;
  if (e < 0) {
    base = laurent_invert(a, work_trunc);
    e = -e;
  }
  LaurentSeries acc = LaurentSeries::from_series(
      TruncatedSeries::polynomial({Rational(1)}));
  while (e > 0) {
    if (e & 1) acc = laurent_mul(acc, base);
    base = (e >>= 1) ? laurent_mul(base, base) : base;
  }
  return acc;
}

bool agree(const LaurentSeries& a, const LaurentSeries& b) {
  long h = min_known(a.known_through(), b.known_through());
  long lo = std::min(a.ord(), b.ord());
  if (h == kKnownAll) {
    h = std::max(a.ord() + static_cast<long>(a.body().coeffs().size()),
                 b.ord() + static_cast<long>(b.body().coeffs().size())) - 1;
  }
  for (long k = lo; k <= h; ++k) {
    if (a.coefficient(k) != b.coefficient(k)) return false;
  }
  return true;
}

std::string to_string(const LaurentSeries& s, const std::string& var) {
  if (s.identically_zero()) return "0";
  return format_series(s.ord(), s.body().coeffs(), s.known_through(), s.exact(),
                       var);
}

}  // namespace curveode
