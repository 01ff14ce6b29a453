#include <cmath>
#include <numbers>
#include <random>

#include <initializer_list>
#include <stdexcept>

#include "doctest.h"
#include "logq/analytic.hpp"
#include "logq/laplacian.hpp"
#include "logq/state.hpp"

using logq::EncodingKind;
using logq::EncodingSpec;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("example_cost at chosen corners") {
  CHECK(logq::example_cost(0, 0, 0, 0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(logq::example_cost(0, 1, 0, 1) ==
        doctest::Approx(-15.0).epsilon(1e-12));
  CHECK(logq::example_cost(0, 1, 1, 0) == doctest::Approx(-8.0).epsilon(1e-12));
  // corner (0,1,1,0) pairs with the assignment (+1,-1,-1,+1): cut 3+1+4
  CHECK(cut_value(logq::example_graph(), {1, -1, -1, 1}) == 8.0);
}

TEST_CASE("minus example_cost equals the cut at every binary corner") {
  const logq::Graph g = logq::example_graph();
  for (int bits = 0; bits < 16; ++bits) {
    double r[4];
    std::vector<int> x(4);
    for (int i = 0; i < 4; ++i) {
      r[i] = (bits >> i) & 1;
      x[i] = r[i] > 0.5 ? -1 : 1;
    }
    CHECK(std::abs(-logq::example_cost(r[0], r[1], r[2], r[3]) -
                   cut_value(g, x)) < 1e-12);
  }
}

TEST_CASE("example_cost tracks the closed-form cost on random angles") {
  const logq::LaplacianMatrix lap = build_laplacian(logq::example_graph());
  const EncodingSpec enc{EncodingKind::DistortedSigmoid, 5.0, 0.2, 0.6};
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    logq::ThetaVector theta(4);
    for (double& t : theta)
      t = -0.6 * kPi +
          3.2 * kPi * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    const double via_example = logq::example_cost(
        enc.r(theta[0]), enc.r(theta[1]), enc.r(theta[2]), enc.r(theta[3]));
    CHECK(std::abs(via_example - cost_closed_form(theta, enc, lap)) < 1e-9);
  }
}

TEST_CASE("step slice is piecewise constant at +/-2") {
  logq::SliceRequest req;
  req.alpha = 0.0;
  req.beta = 0.0;
  req.enc = {EncodingKind::Step, 5.0, 0.2, 0.6};
  req.start = -0.6 * kPi;
  req.stop = 2.6 * kPi;
  req.points = 801;
  for (const logq::SlicePoint& p : slice(req)) {
    CHECK((std::abs(p.f - 2.0) < 1e-12 || std::abs(p.f + 2.0) < 1e-12));
    const double r = logq::r_step(p.theta0);
    CHECK(p.f == doctest::Approx(r > 0.5 ? -2.0 : 2.0));
  }
}

TEST_CASE("sharp sigmoid slice has the two-plateau shape") {
  logq::SliceRequest req;
  req.alpha = 0.0;
  req.beta = 0.0;
  req.enc = {EncodingKind::Sigmoid, 30.0, 0.2, 0.6};
  req.start = -0.6 * kPi;
  req.stop = 2.6 * kPi;
  req.points = 2001;
  const auto pts = slice(req);
  CHECK(pts.front().f == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(pts.back().f == doctest::Approx(-2.0).epsilon(1e-6));
  CHECK(pts[1000].f == doctest::Approx(0.0).epsilon(1e-9));  // theta0 = pi
}

TEST_CASE("find_local_minima: strict minima with barrier depths") {
  const std::vector<double> v = {3, 1, 2, 0, 5};
  const auto minima = logq::find_local_minima(v);
  REQUIRE(minima.size() == 2);
  CHECK(minima[0].index == 1);
  CHECK(minima[0].value == 1.0);
  CHECK(minima[0].depth == 1.0);  // barrier 2 on the way to the global 0
  CHECK_FALSE(minima[0].boundary);
  CHECK(minima[1].index == 3);
  CHECK(minima[1].depth == 0.0);  // the global minimum itself
}

TEST_CASE("find_local_minima: boundary runs count with one neighbor") {
  const auto rising = logq::find_local_minima({0.0, 1.0, 2.0});
  REQUIRE(rising.size() == 1);
  CHECK(rising[0].index == 0);
  CHECK(rising[0].boundary);

  const auto falling = logq::find_local_minima({2.0, 1.0, 0.0});
  REQUIRE(falling.size() == 1);
  CHECK(falling[0].index == 2);

  // flat ties are not strict minima
  CHECK(logq::find_local_minima({1.0, 1.0, 1.0}).empty());
}

TEST_CASE("find_local_minima: two basins across a hump") {
  // equal-depth wells; the global resolves to the lowest value, ties to the
  // first index, and the other well reports the hump as its barrier
  const std::vector<double> w = {0.0, 3.0, 0.5, 3.0, 0.1};
  const auto minima = logq::find_local_minima(w);
  REQUIRE(minima.size() == 3);
  CHECK(minima[0].depth == 0.0);        // index 0, global
  CHECK(minima[1].index == 2);
  CHECK(minima[1].depth == 2.5);        // over the hump at 3.0
  CHECK(minima[2].index == 4);
  CHECK(minima[2].depth == 2.9);
  CHECK(minima[2].boundary);
}

TEST_CASE("slice rejects degenerate grids") {
  logq::SliceRequest req;
  req.points = 1;
  CHECK_THROWS_AS(slice(req), std::invalid_argument);
}
