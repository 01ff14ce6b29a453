#include "logq/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logq {

namespace {
constexpr double kPi = std::numbers::pi;
}

Graph example_graph() {
  return Graph(4, {{0, 1, 3.0}, {0, 2, 1.0}, {1, 2, 8.0}, {2, 3, 4.0}});
}

double example_cost(double r0, double r1, double r2, double r3) {
  return 1.5 * std::cos(kPi * (r1 - r0)) + 0.5 * std::cos(kPi * (r2 - r0)) +
         4.0 * std::cos(kPi * (r2 - r1)) + 2.0 * std::cos(kPi * (r3 - r2)) -
         8.0;
}

std::vector<SlicePoint> slice(const SliceRequest& req) {
  if (req.points < 2)
    throw std::invalid_argument("slice: need at least 2 grid points");
  req.enc.validate();
  std::vector<SlicePoint> out;
  out.reserve(req.points);
  const double step = (req.stop - req.start) / (req.points - 1);
  for (int i = 0; i < req.points; ++i) {
    const double theta0 = req.start + i * step;
    const double r = req.enc.r(theta0);
    const double f = 1.5 * std::cos(kPi * (req.alpha - r)) +
                     0.5 * std::cos(kPi * (req.beta - r));
    out.push_back({theta0, f});
  }
  return out;
}

std::vector<LocalMinimum> find_local_minima(const std::vector<double>& values) {
  const int m = static_cast<int>(values.size());
  std::vector<LocalMinimum> out;
  if (m < 2) return out;

  const int global =
      static_cast<int>(std::min_element(values.begin(), values.end()) -
                       values.begin());

  auto barrier_to_global = [&](int i) {
    double peak = values[i];
    const int lo = std::min(i, global), hi = std::max(i, global);
    for (int j = lo; j <= hi; ++j) peak = std::max(peak, values[j]);
    return peak - values[i];
  };

  for (int i = 0; i < m; ++i) {
    const bool left_ok = (i == 0) || values[i] < values[i - 1];
    const bool right_ok = (i == m - 1) || values[i] < values[i + 1];
    if (left_ok && right_ok)
      out.push_back({i, values[i], barrier_to_global(i), i == 0 || i == m - 1});
  }
  return out;
}

}  // namespace logq
