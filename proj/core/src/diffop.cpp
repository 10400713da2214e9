#include "curveode/diffop.hpp"

#include "curveode/error.hpp"

namespace curveode {

namespace {

TruncatedSeries shift_down(TruncatedSeries h, long m) {
  for (long i = 0; i < m; ++i) h = shift(h);
  return h;
}

}  // namespace

SeriesFunction module_action(const TruncatedSeries& f, const SeriesFunction& w) {
  return {mul(f, w.h)};
}

SeriesFunction derivative(const SeriesFunction& w) { return {shift(w.h)}; }

SeriesFunction integral(const SeriesFunction& w) { return {shift_up(w.h)}; }

DiffOperator::DiffOperator(LaurentSeries phi) : phi_(std::move(phi)) {
  std::optional<long> ord = phi_.order();  // IndeterminateOrder on fuzzy zero
  if (!ord) {
    fail(errc::invalid_argument, "operator symbol must be a nonzero series");
  }
  degree_ = -*ord;
  m_ = std::max(0L, degree_);
  // f = T^m phi has non-negative order m + ord.
  f_ = shift_up(phi_.body(), m_ + *ord);
}

SeriesFunction apply(const DiffOperator& op, const SeriesFunction& w) {
  if (!w.h.exact() && w.h.truncation() < op.shift_order()) {
    fail(errc::insufficient_truncation,
         "applying the operator differentiates " +
             std::to_string(op.shift_order()) +
             " times; the model only stores " +
             std::to_string(w.h.truncation() + 1) + " derivatives");
  }
  return {shift_down(mul(op.numerator(), w.h), op.shift_order())};
}

std::vector<SeriesFunction> solve(const DiffOperator& op, long N) {
  long n = op.degree();
  if (n <= 0) {
    fail(errc::not_positive_degree,
         "equation degree is " + std::to_string(n) +
             "; no solutions other than 0");
  }
  TruncatedSeries inv = invert(op.numerator(), N);
  std::vector<SeriesFunction> basis;
  basis.reserve(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) {
    basis.push_back({shift_up(inv, k).truncated(N)});
  }
  return basis;
}

SeriesFunction solve_ivp(const DiffOperator& op, const std::vector<Rational>& init,
                         long N) {
  long n = op.degree();
  if (n <= 0) {
    fail(errc::not_positive_degree,
         "equation degree is " + std::to_string(n) +
             "; no solutions other than 0");
  }
  if (static_cast<long>(init.size()) != n) {
    fail(errc::invalid_argument,
         "expected " + std::to_string(n) + " initial values, got " +
             std::to_string(init.size()));
  }
  const TruncatedSeries& u = op.numerator();
  // p = (c u) mod T^n, so that p/u = c mod T^n: the first n derivatives of
  // E(p/u) are exactly the requested initial values.
  std::vector<Rational> p(static_cast<size_t>(n), Rational(0));
  for (long k = 0; k < n; ++k) {
    Rational acc(0);
    for (long i = 0; i <= k; ++i) acc += init[static_cast<size_t>(i)] * u.at(k - i);
    p[static_cast<size_t>(k)] = acc;
  }
  TruncatedSeries numerator = TruncatedSeries::polynomial(std::move(p));
  return {mul(numerator, invert(u, N))};
}

bool representations_agree(const TruncatedSeries& f, long m,
                           const TruncatedSeries& g, long n,
                           const SeriesFunction& w) {
  TruncatedSeries lhs = shift_down(mul(f, w.h), m);
  TruncatedSeries rhs = shift_down(mul(g, w.h), n);
  return agree(lhs, rhs);
}

}  // namespace curveode
