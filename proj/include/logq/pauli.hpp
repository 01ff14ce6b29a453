#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "logq/laplacian.hpp"

namespace logq {

using StateVector = std::vector<std::complex<double>>;

/// One Pauli tensor-product term. `letters` has one symbol from {I,X,Y,Z}
/// per qubit, qubit 0 first (most significant bit of the basis index).
struct PauliTerm {
  std::string letters;
  double coefficient = 0.0;
};

struct PauliDecomposition {
  std::vector<PauliTerm> terms;  // lexicographic, I < X < Y < Z
  int n_qubits = 0;
};

/// Upper bound on the number of symmetric Pauli strings: (4^N + 2^N) / 2.
std::size_t max_term_count(int n_qubits);

/// L = sum_k Tr(J_k L)/2^N * J_k over all Pauli strings J_k. Strings with an
/// odd number of Y letters have exactly zero coefficient on a real symmetric
/// matrix and are skipped; the rest are pruned at |c| <= prune_epsilon.
/// Terms are computed independently, so the k-range may be split across
/// `threads` workers; output order is fixed regardless.
PauliDecomposition decompose(const LaplacianMatrix& lap,
                             double prune_epsilon = 1e-12, int threads = 1);

/// sum_k c_k <psi|J_k|psi>. Throws on dimension mismatch or if the imaginary
/// residual of the sum exceeds 1e-9.
double expectation(const PauliDecomposition& d, const StateVector& psi);

/// Dense sum_k c_k J_k, for round-trip checks against the original matrix.
Eigen::MatrixXd reconstruct(const PauliDecomposition& d);

}  // namespace logq
