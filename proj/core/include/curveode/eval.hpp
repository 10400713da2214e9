#pragma once

#include <string>
#include <vector>

#include "curveode/diffop.hpp"

namespace curveode {

// Sampling interval containing the model's base point 0.
struct EvalGrid {
  double lo;
  double hi;
  long count;
};

// Parse "lo:hi:count"; ConfigError on malformed input or an interval that
// does not contain 0.
EvalGrid parse_grid(const std::string& text);
void validate_grid(const EvalGrid& grid);

struct SampleRow {
  double xi;
  double value;
  double tail_bound;    // +inf when the heuristic gave up
  bool tail_reliable;
};

struct SampleTable {
  std::vector<SampleRow> rows;
};

// Partial sum of  Sigma: h_k xi^k / k!  through the stored truncation, with a
// geometric tail estimate from the trailing coefficient ratios.  Outside the
// estimated safe radius the bound is reported as unreliable, never silently
// clamped.
SampleRow eval_sample(const SeriesFunction& w, double xi);
SampleTable eval_function(const SeriesFunction& w, const EvalGrid& grid);

// "xi,value,tail_bound" header plus one row per sample; shortest
// round-trip formatting, locale-independent.
std::string to_csv(const SampleTable& table);

}  // namespace curveode
