#pragma once

#include <Eigen/Dense>
#include <vector>

#include "logq/graph.hpp"

namespace logq {

/// Number of qubits needed for n vertices: ceil(log2 n), with the n = 1
/// degenerate case pinned to 1 so the state space is never trivial.
int qubit_count(int n_vertices);

/// Graph Laplacian, zero-padded to the next power-of-two dimension.
/// Rows and columns with index >= n_original are identically zero.
struct LaplacianMatrix {
  Eigen::MatrixXd entries;
  int n_original = 0;

  int dim() const { return static_cast<int>(entries.rows()); }
  int n_qubits() const { return qubit_count(n_original); }
};

LaplacianMatrix build_laplacian(const Graph& g);

/// (1/4) x^T L x over the first n coordinates: the total weight of edges cut
/// by the +/-1 assignment. Throws on length mismatch or non +/-1 entries.
double cut_value(const Graph& g, const std::vector<int>& assignment);

}  // namespace logq
