#pragma once

#include <stdexcept>
#include <string>

namespace curveode {

// Failure categories used across the library. The CLI maps kind()
// strings verbatim into its structured error output.
enum class errc {
  zero_free_term,
  non_square_free_term,
  zero_division,
  indeterminate_order,
  degenerate_branch,
  not_on_curve,
  syntax_error,
  unknown_variable,
  precision_exhausted,
  insufficient_truncation,
  not_positive_degree,
  invalid_chart,
  config_error,
  invalid_argument,
};

inline const char* to_kind(errc code) {
  switch (code) {
    case errc::zero_free_term: return "ZeroFreeTerm";
    case errc::non_square_free_term: return "NonSquareFreeTerm";
    case errc::zero_division: return "ZeroDivision";
    case errc::indeterminate_order: return "IndeterminateOrder";
    case errc::degenerate_branch: return "DegenerateBranch";
    case errc::not_on_curve: return "NotOnCurve";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_variable: return "UnknownVariable";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::insufficient_truncation: return "InsufficientTruncation";
    case errc::not_positive_degree: return "NotPositiveDegree";
    case errc::invalid_chart: return "InvalidChart";
    case errc::config_error: return "ConfigError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }
  const char* kind() const { return to_kind(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace curveode
