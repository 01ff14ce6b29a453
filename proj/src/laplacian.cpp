#include "logq/laplacian.hpp"

#include <stdexcept>

namespace logq {

int qubit_count(int n_vertices) {
  if (n_vertices < 1)
    throw std::invalid_argument("qubit_count: need at least one vertex");
  if (n_vertices == 1) return 1;
  int n_qubits = 0;
  while ((1 << n_qubits) < n_vertices) ++n_qubits;
  return n_qubits;
}

LaplacianMatrix build_laplacian(const Graph& g) {
  const int n = g.n_vertices();
  const int dim = 1 << qubit_count(n);
  LaplacianMatrix lap;
  lap.n_original = n;
  lap.entries = Eigen::MatrixXd::Zero(dim, dim);
  for (const Edge& e : g.edges()) {
    lap.entries(e.u, e.u) += e.w;
    lap.entries(e.v, e.v) += e.w;
    lap.entries(e.u, e.v) -= e.w;
    lap.entries(e.v, e.u) -= e.w;
  }
  return lap;
}

double cut_value(const Graph& g, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != g.n_vertices())
    throw std::invalid_argument("cut_value: assignment length mismatch");
  for (int x : assignment)
    if (x != 1 && x != -1)
      throw std::invalid_argument("cut_value: entries must be +1 or -1");
  double cut = 0.0;
  for (const Edge& e : g.edges())
    if (assignment[e.u] != assignment[e.v]) cut += e.w;
  return cut;
}

}  // namespace logq
