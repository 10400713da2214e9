#pragma once

#include <vector>

#include "curveode/rational.hpp"

namespace curveode {

// Rank of a dense rational matrix, by exact Gaussian elimination.
long exact_rank(std::vector<std::vector<Rational>> m);

}  // namespace curveode
