#pragma once

#include <vector>

#include "logq/encoding.hpp"
#include "logq/laplacian.hpp"
#include "logq/pauli.hpp"

namespace logq {

/// The 2^N angles being optimized; entry z sets the phase of basis state |z>.
using ThetaVector = std::vector<double>;

/// amplitude_z = 2^{-N/2} exp(i pi R(theta_z)). Unit norm by construction.
StateVector build_state(const ThetaVector& theta, const EncodingSpec& enc);

/// C(theta) = -(1/4) [ sum_z L_zz + 2 sum_{z>w} L_wz cos(pi (R_w - R_z)) ].
/// Equals minus the cut weight whenever every R value is binary.
double cost_closed_form(const ThetaVector& theta, const EncodingSpec& enc,
                        const LaplacianMatrix& lap);

/// Same quantity via the Pauli expectation route: -(2^N / 4) <psi|L|psi>.
double cost_statevector(const ThetaVector& theta, const EncodingSpec& enc,
                        const PauliDecomposition& d);

/// dC/dtheta_z = -(pi/2) R'(theta_z) sum_{w != z} L_wz sin(pi (R_w - R_z)).
std::vector<double> cost_gradient(const ThetaVector& theta,
                                  const EncodingSpec& enc,
                                  const LaplacianMatrix& lap);

struct CutExtraction {
  std::vector<int> assignment;    // +/-1 per vertex (length n)
  double convergence_diag = 0.0;  // max_z min(R, 1-R) over real vertices
};

/// Vertex z joins the first set when R(theta_z) < 0.5, the second otherwise.
CutExtraction extract_cut(const ThetaVector& theta, const EncodingSpec& enc,
                          int n_vertices);

}  // namespace logq
