#include "curveode/linalg.hpp"

namespace curveode {

long exact_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size();
  size_t cols = m[0].size();
  long rank = 0;
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t sel = pivot_row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[pivot_row]);
    const Rational pivot = m[pivot_row][col];
    for (size_t r = pivot_row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / pivot;
      for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[pivot_row][c];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace curveode
