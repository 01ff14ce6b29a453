#pragma once

#include <vector>

#include "logq/encoding.hpp"
#include "logq/graph.hpp"

namespace logq {

/// The 4-vertex reference instance: edges (0,1,3), (0,2,1), (1,2,8), (2,3,4).
Graph example_graph();

/// Closed-form cost of the 4-vertex instance as a function of the four phase
/// fractions: 1.5 cos(pi[R1-R0]) + 0.5 cos(pi[R2-R0]) + 4 cos(pi[R2-R1])
/// + 2 cos(pi[R3-R2]) - 8. Minus this equals the cut value at binary corners.
double example_cost(double r0, double r1, double r2, double r3);

struct SliceRequest {
  double alpha = 0.0;  // stands in for R(theta_1)
  double beta = 0.0;   // stands in for R(theta_2)
  EncodingSpec enc;
  double start = 0.0;
  double stop = 0.0;
  int points = 2001;
};

struct SlicePoint {
  double theta0 = 0.0;
  double f = 0.0;
};

/// f_{alpha,beta}(theta0) = 1.5 cos(pi[alpha - R(theta0)])
///                        + 0.5 cos(pi[beta - R(theta0)]) on a uniform grid.
std::vector<SlicePoint> slice(const SliceRequest& req);

/// A strict discrete local minimum of a sampled 1-D function (lower than its
/// existing neighbors; the first/last grid point counts with one neighbor).
/// `depth` is the barrier separating it from the global minimum: the highest
/// value on the grid path between the two, minus the minimum's own value
/// (0 for the global minimum itself). Float-noise dimples show up with tiny
/// depths and can be filtered by thresholding depth.
struct LocalMinimum {
  int index = 0;
  double value = 0.0;
  double depth = 0.0;
  bool boundary = false;
};

std::vector<LocalMinimum> find_local_minima(const std::vector<double>& values);

}  // namespace logq
