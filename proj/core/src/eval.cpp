#include "curveode/eval.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "curveode/error.hpp"

namespace curveode {

namespace {

double parse_double(const std::string& s) {
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(begin, &end);
  if (end != begin + s.size() || s.empty() || errno != 0) {
    fail(errc::config_error, "malformed number '" + s + "' in grid");
  }
  return v;
}

std::string fmt_double(double d) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, res.ptr);
}

}  // namespace

EvalGrid parse_grid(const std::string& text) {
  size_t first = text.find(':');
  size_t second = first == std::string::npos ? std::string::npos
                                             : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    fail(errc::config_error, "grid must be lo:hi:count, got '" + text + "'");
  }
  EvalGrid grid;
  grid.lo = parse_double(text.substr(0, first));
  grid.hi = parse_double(text.substr(first + 1, second - first - 1));
  std::string count_text = text.substr(second + 1);
  errno = 0;
  char* end = nullptr;
  grid.count = std::strtol(count_text.c_str(), &end, 10);
  if (count_text.empty() || end != count_text.c_str() + count_text.size() ||
      errno != 0) {
    fail(errc::config_error, "malformed count '" + count_text + "' in grid");
  }
  validate_grid(grid);
  return grid;
}

void validate_grid(const EvalGrid& grid) {
  if (!std::isfinite(grid.lo) || !std::isfinite(grid.hi)) {
    fail(errc::config_error, "grid endpoints must be finite");
  }
  if (grid.count < 2) {
    fail(errc::config_error, "grid needs at least 2 samples");
  }
  if (grid.lo >= grid.hi) {
    fail(errc::config_error, "grid needs lo < hi");
  }
  if (grid.lo > 0 || grid.hi < 0) {
    fail(errc::config_error,
         "grid must contain the base point 0 (lo <= 0 <= hi)");
  }
}

SampleRow eval_sample(const SeriesFunction& w, double xi) {
  const std::vector<Rational>& h = w.h.coeffs();
  long top = static_cast<long>(h.size()) - 1;

  // Exact xi-coefficients c_k = h_k / k!.
  std::vector<Rational> c(h.size());
  Integer kfact(1);
  for (long k = 0; k <= top; ++k) {
    if (k > 0) kfact *= k;
    c[static_cast<size_t>(k)] = h[static_cast<size_t>(k)] / Rational(kfact);
  }

  double value = 0.0;
  for (long k = top; k >= 0; --k) {
    value = value * xi + to_double_nearest(c[static_cast<size_t>(k)]);
  }

  SampleRow row{xi, value, 0.0, true};
  if (w.h.exact() || xi == 0.0) return row;

  // Trailing nonzero coefficients drive the geometric tail estimate.
  std::vector<long> nz;
  for (long k = 0; k <= top; ++k) {
    if (c[static_cast<size_t>(k)] != 0) nz.push_back(k);
  }
  const size_t window = 6;
  if (nz.size() > window) nz.erase(nz.begin(), nz.end() - window);
  if (nz.size() < 2) {
    row.tail_bound = std::numeric_limits<double>::infinity();
    row.tail_reliable = false;
    return row;
  }
  double rho = 0.0;
  for (size_t i = 0; i + 1 < nz.size(); ++i) {
    long a = nz[i], b = nz[i + 1];
    Rational ratio = abs(c[static_cast<size_t>(b)]) / abs(c[static_cast<size_t>(a)]);
    rho = std::max(rho, std::pow(to_double_nearest(ratio), 1.0 / (b - a)));
  }
  double q = rho * std::abs(xi);
  if (!(q < 1.0)) {
    row.tail_bound = std::numeric_limits<double>::infinity();
    row.tail_reliable = false;
    return row;
  }
  long m = nz.back();
  double t_last = to_double_nearest(abs(c[static_cast<size_t>(m)])) *
                  std::pow(std::abs(xi), static_cast<double>(m));
  row.tail_bound = t_last * std::pow(q, static_cast<double>(top + 1 - m)) / (1.0 - q);
  return row;
}

SampleTable eval_function(const SeriesFunction& w, const EvalGrid& grid) {
  validate_grid(grid);
  SampleTable table;
  table.rows.reserve(static_cast<size_t>(grid.count));
  for (long i = 0; i < grid.count; ++i) {
    double xi = (i == grid.count - 1)
                    ? grid.hi
                    : grid.lo + (grid.hi - grid.lo) *
                                    (static_cast<double>(i) /
                                     static_cast<double>(grid.count - 1));
    table.rows.push_back(eval_sample(w, xi));
  }
  return table;
}

std::string to_csv(const SampleTable& table) {
  std::string out = "xi,value,tail_bound\n";
  for (const SampleRow& row : table.rows) {
    out += fmt_double(row.xi);
    out += ',';
    out += fmt_double(row.value);
    out += ',';
    out += fmt_double(row.tail_bound);
    out += '\n';
  }
  return out;
}

}  // namespace curveode
