#pragma once

#include <string>
#include <vector>

#include "curveode/curve.hpp"
#include "curveode/diffop.hpp"
#include "curveode/eval.hpp"
#include "curveode/series.hpp"
#include "curveode/special.hpp"

namespace curveode {

// JSON forms used at the tool boundary.  Exact numbers serialize as "p" or
// "p/q" strings, never floats; key order is fixed, so identical inputs give
// byte-identical output.

std::string to_json(const TruncatedSeries& s);
std::string to_json(const LaurentSeries& s);
std::string to_json(const SeriesFunction& w);
std::string basis_to_json(long degree, const std::vector<SeriesFunction>& basis,
                          const std::string& note = "");
std::string report_to_json(const VerifyReport& report);
std::string table_to_json(const SampleTable& table);
std::string error_to_json(const std::string& kind, const std::string& detail);

LaurentSeries laurent_from_json(const std::string& text);
SeriesFunction function_from_json(const std::string& text);
// {"F": polynomial in u,t; "u0": rational; "coords": {name: expression}}
CurveChart chart_from_json(const std::string& text);

// CSV with exact coefficient strings: header "k,coefficient".
std::string to_csv(const LaurentSeries& s);
std::string to_csv(const TruncatedSeries& s);
std::string to_csv(const SeriesFunction& w);
std::string report_to_csv(const VerifyReport& report);

}  // namespace curveode
