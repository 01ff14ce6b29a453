#include <random>

#include <initializer_list>
#include <stdexcept>

#include "doctest.h"
#include "logq/analytic.hpp"
#include "logq/laplacian.hpp"
#include "logq/oracle.hpp"

using logq::Graph;

TEST_CASE("brute force finds the reference optimum") {
  const logq::BruteForceResult r = brute_force_maxcut(logq::example_graph());
  CHECK(r.best_value == 15.0);
  CHECK(r.assignment == std::vector<int>{1, -1, 1, -1});
}

TEST_CASE("edgeless and tiny graphs") {
  const logq::BruteForceResult empty = brute_force_maxcut(Graph(3, {}));
  CHECK(empty.best_value == 0.0);
  CHECK(empty.assignment == std::vector<int>{1, 1, 1});

  const logq::BruteForceResult one = brute_force_maxcut(Graph(1, {}));
  CHECK(one.best_value == 0.0);
  CHECK(one.assignment == std::vector<int>{1});
}

TEST_CASE("unit triangle cuts at most two edges") {
  const Graph k3(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
  CHECK(brute_force_maxcut(k3).best_value == 2.0);
}

TEST_CASE("cut value is sign-symmetric") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Graph g = logq::gnp_random_graph(n, 0.5, rng());
    std::vector<int> x(n), neg(n);
    for (int i = 0; i < n; ++i) {
      x[i] = (rng() & 1) ? 1 : -1;
      neg[i] = -x[i];
    }
    CHECK(cut_value(g, x) == cut_value(g, neg));
  }
}

TEST_CASE("the first vertex is pinned to +1") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = logq::gnp_random_graph(9, 0.4, rng());
    const logq::BruteForceResult r = brute_force_maxcut(g);
    CHECK(r.assignment[0] == 1);
    CHECK(cut_value(g, r.assignment) == r.best_value);
  }
}

TEST_CASE("enumeration bound is enforced") {
  CHECK_THROWS_AS(brute_force_maxcut(Graph(25, {})), std::invalid_argument);
}

TEST_CASE("partitioned scan gives the sequential answer") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = logq::gnp_random_graph(16, 0.4, rng());
    const logq::BruteForceResult seq = brute_force_maxcut(g, 1);
    const logq::BruteForceResult par = brute_force_maxcut(g, 4);
    CHECK(seq.best_value == par.best_value);
    CHECK(seq.assignment == par.assignment);
  }
}
