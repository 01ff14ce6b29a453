#include "logq/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logq {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> r_values(const ThetaVector& theta,
                             const EncodingSpec& enc) {
  std::vector<double> r(theta.size());
  for (std::size_t z = 0; z < theta.size(); ++z) r[z] = enc.r(theta[z]);
  return r;
}

void check_dim(std::size_t got, int dim, const char* where) {
  if (got != static_cast<std::size_t>(dim))
    throw std::invalid_argument(std::string(where) +
                                ": theta length does not match 2^N");
}

}  // namespace

StateVector build_state(const ThetaVector& theta, const EncodingSpec& enc) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(theta.size()));
  StateVector psi(theta.size());
  for (std::size_t z = 0; z < theta.size(); ++z) {
    const double phase = kPi * enc.r(theta[z]);
    psi[z] = {amp * std::cos(phase), amp * std::sin(phase)};
  }
  return psi;
}

double cost_closed_form(const ThetaVector& theta, const EncodingSpec& enc,
                        const LaplacianMatrix& lap) {
  const int dim = lap.dim();
  check_dim(theta.size(), dim, "cost_closed_form");
  const std::vector<double> r = r_values(theta, enc);
  double acc = 0.0;
  for (int z = 0; z < dim; ++z) {
    acc += lap.entries(z, z);
    for (int w = 0; w < z; ++w) {
      const double lwz = lap.entries(w, z);
      if (lwz != 0.0) acc += 2.0 * lwz * std::cos(kPi * (r[w] - r[z]));
    }
  }
  return -0.25 * acc;
}

double cost_statevector(const ThetaVector& theta, const EncodingSpec& enc,
                        const PauliDecomposition& d) {
  const int dim = 1 << d.n_qubits;
  check_dim(theta.size(), dim, "cost_statevector");
  const StateVector psi = build_state(theta, enc);
  return -0.25 * static_cast<double>(dim) * expectation(d, psi);
}

std::vector<double> cost_gradient(const ThetaVector& theta,
                                  const EncodingSpec& enc,
                                  const LaplacianMatrix& lap) {
  if (!enc.differentiable())
    throw std::invalid_argument("cost_gradient: encoding not differentiable");
  const int dim = lap.dim();
  check_dim(theta.size(), dim, "cost_gradient");
  const std::vector<double> r = r_values(theta, enc);
  std::vector<double> grad(dim, 0.0);
  for (int z = 0; z < dim; ++z) {
    double s = 0.0;
    for (int w = 0; w < dim; ++w) {
      if (w == z) continue;
      const double lwz = lap.entries(w, z);
      if (lwz != 0.0) s += lwz * std::sin(kPi * (r[w] - r[z]));
    }
    grad[z] = -0.5 * kPi * enc.r_derivative(theta[z]) * s;
  }
  return grad;
}

CutExtraction extract_cut(const ThetaVector& theta, const EncodingSpec& enc,
                          int n_vertices) {
  if (theta.size() < static_cast<std::size_t>(n_vertices))
    throw std::invalid_argument("extract_cut: theta shorter than vertex count");
  CutExtraction out;
  out.assignment.resize(n_vertices);
  for (int z = 0; z < n_vertices; ++z) {
    const double r = enc.r(theta[z]);
    out.assignment[z] = r < 0.5 ? 1 : -1;
    out.convergence_diag =
        std::max(out.convergence_diag, std::min(r, 1.0 - r));
  }
  return out;
}

}  // namespace logq
