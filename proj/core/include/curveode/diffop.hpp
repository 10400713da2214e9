#pragma once

#include <vector>

#include "curveode/series.hpp"

namespace curveode {

// Taylor model at 0 of the analytic function  w(xi) = Sigma: h_k xi^k / k!,
// i.e. h_k = w^(k)(0).  Produced by the E-transform of a T-series.
struct SeriesFunction {
  TruncatedSeries h;

  bool operator==(const SeriesFunction&) const = default;
};

inline SeriesFunction e_transform(const TruncatedSeries& f) { return {f}; }

// fw = Sigma: f_n Int^n w.  On Taylor models the integral shifts h up, so the
// action is the Cauchy product of f with w.h.
SeriesFunction module_action(const TruncatedSeries& f, const SeriesFunction& w);

// d/dxi and the integral with value 0 at 0; derivatives shift h down,
// integrals shift it up.
SeriesFunction derivative(const SeriesFunction& w);
SeriesFunction integral(const SeriesFunction& w);

// The operator  w -> D^m (f w)  attached to the Laurent symbol phi = f / T^m
// with m = max(0, -ord(phi)).  Its kernel equation has degree -ord(phi).
class DiffOperator {
 public:
  explicit DiffOperator(LaurentSeries phi);

  const LaurentSeries& symbol() const { return phi_; }
  // f in the canonical fraction phi = f / T^m.
  const TruncatedSeries& numerator() const { return f_; }
  long shift_order() const { return m_; }
  long degree() const { return degree_; }

 private:
  LaurentSeries phi_;
  TruncatedSeries f_;
  long m_;
  long degree_;
};

// D^m(f w) as a Taylor model; the truncation drops by m.
SeriesFunction apply(const DiffOperator& op, const SeriesFunction& w);

// Basis E(T^k / u), k = 0..n-1, of the kernel when phi = u / T^n with u a
// unit and n = degree >= 1; each element truncated at N.  Raises
// NotPositiveDegree otherwise (the kernel is then {0}).
std::vector<SeriesFunction> solve(const DiffOperator& op, long N);

// The unique kernel element with w^(k)(0) = init[k] for k < degree:
// w = E(p/u) with p = (c u) mod T^n.
SeriesFunction solve_ivp(const DiffOperator& op, const std::vector<Rational>& init,
                         long N);

// When T^n f = T^m g, the operators D^m(f .) and D^n(g .) coincide; this
// predicate checks the identity on a concrete Taylor model.
bool representations_agree(const TruncatedSeries& f, long m,
                           const TruncatedSeries& g, long n,
                           const SeriesFunction& w);

}  // namespace curveode
