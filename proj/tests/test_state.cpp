#include <cmath>
#include <numbers>
#include <random>

#include <initializer_list>
#include <stdexcept>

#include "doctest.h"
#include "logq/analytic.hpp"
#include "logq/oracle.hpp"
#include "logq/state.hpp"

using logq::EncodingKind;
using logq::EncodingSpec;
using logq::ThetaVector;

namespace {

constexpr double kPi = std::numbers::pi;

const EncodingSpec kStep{EncodingKind::Step, 5.0, 0.2, 0.6};
const EncodingSpec kDistorted{EncodingKind::DistortedSigmoid, 5.0, 0.2, 0.6};

// Step-encoding angles realizing a binary R configuration.
ThetaVector binary_theta(const std::vector<int>& bits) {
  ThetaVector theta(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    theta[i] = bits[i] ? 1.5 * kPi : 0.5 * kPi;
  return theta;
}

ThetaVector random_theta(std::size_t dim, std::mt19937_64& rng,
                         double lo = 0.0, double hi = 2.0 * kPi) {
  ThetaVector theta(dim);
  for (double& t : theta)
    t = lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  return theta;
}

}  // namespace

TEST_CASE("build_state produces the expected phases") {
  // N = 1, R = (0, 1): (1, -1)/sqrt(2)
  const logq::StateVector s1 = build_state(binary_theta({0, 1}), kStep);
  const double isq2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s1[0] - std::complex<double>(isq2, 0.0)) < 1e-12);
  CHECK(std::abs(s1[1] - std::complex<double>(-isq2, 0.0)) < 1e-12);

  // N = 2, all R = 0: the uniform superposition
  const logq::StateVector s2 = build_state(binary_theta({0, 0, 0, 0}), kStep);
  for (const auto& amp : s2) CHECK(std::abs(amp - 0.5) < 1e-12);
}

TEST_CASE("build_state keeps unit norm and flat moduli") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 1ull << (1 + trial % 4);
    const logq::StateVector psi =
        build_state(random_theta(dim, rng), kDistorted);
    double norm = 0.0;
    for (const auto& amp : psi) {
      norm += std::norm(amp);
      CHECK(std::abs(std::abs(amp) - 1.0 / std::sqrt(double(dim))) < 1e-9);
    }
    CHECK(std::abs(norm - 1.0) < 1e-12);
  }
}

TEST_CASE("closed-form cost on the reference instance") {
  const logq::LaplacianMatrix lap = build_laplacian(logq::example_graph());
  CHECK(cost_closed_form(binary_theta({0, 0, 0, 0}), kStep, lap) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cost_closed_form(binary_theta({0, 1, 0, 1}), kStep, lap) ==
        doctest::Approx(-15.0).epsilon(1e-12));
}

TEST_CASE("constant R costs nothing (zero row sums)") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const logq::LaplacianMatrix lap =
        build_laplacian(logq::gnp_random_graph(n, 0.6, rng()));
    const ThetaVector theta(lap.dim(), 0.8 + 0.1 * trial);
    CHECK(std::abs(cost_closed_form(theta, kDistorted, lap)) < 1e-9);
  }
}

TEST_CASE("statevector and closed-form routes agree") {
  const logq::LaplacianMatrix lap = build_laplacian(logq::example_graph());
  const logq::PauliDecomposition d = decompose(lap);
  CHECK(cost_statevector(binary_theta({0, 1, 0, 1}), kStep, d) ==
        doctest::Approx(-15.0).epsilon(1e-10));

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);
    const logq::Graph g = logq::gnp_random_graph(n, 0.5, rng());
    const logq::LaplacianMatrix l = build_laplacian(g);
    const logq::PauliDecomposition dec = decompose(l);
    const ThetaVector theta =
        random_theta(l.dim(), rng, -0.6 * kPi, 2.6 * kPi);
    const double a = cost_closed_form(theta, kDistorted, l);
    const double b = cost_statevector(theta, kDistorted, dec);
    CHECK(std::abs(a - b) < 1e-8);
  }
}

TEST_CASE("zero Laplacian costs nothing along either route") {
  const logq::Graph g(2, {});
  const logq::LaplacianMatrix lap = build_laplacian(g);
  const ThetaVector theta = {1.0, 4.0};
  CHECK(cost_closed_form(theta, kDistorted, lap) == 0.0);
  CHECK(cost_statevector(theta, kDistorted, decompose(lap)) == 0.0);
}

TEST_CASE("gradient vanishes when all R are equal") {
  const logq::LaplacianMatrix lap = build_laplacian(logq::example_graph());
  const ThetaVector theta(4, 0.37);
  for (double gz : cost_gradient(theta, kDistorted, lap))
    CHECK(std::abs(gz) < 1e-12);
}

TEST_CASE("gradient matches central finite differences") {
  std::mt19937_64 rng(33);
  const double h = 1e-6;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const logq::LaplacianMatrix lap =
        build_laplacian(logq::gnp_random_graph(n, 0.6, rng()));
    ThetaVector theta = random_theta(lap.dim(), rng, -0.6 * kPi + 1e-3,
                                     2.6 * kPi - 1e-3);
    const std::vector<double> grad = cost_gradient(theta, kDistorted, lap);
    for (int z = 0; z < lap.dim(); ++z) {
      ThetaVector up = theta, dn = theta;
      up[z] += h;
      dn[z] -= h;
      const double fd = (cost_closed_form(up, kDistorted, lap) -
                         cost_closed_form(dn, kDistorted, lap)) /
                        (2.0 * h);
      CHECK(std::abs(grad[z] - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST_CASE("gradient components die on plateaus") {
  const logq::LaplacianMatrix lap = build_laplacian(logq::example_graph());
  ThetaVector theta = {0.4 * kPi, 1.6 * kPi, 0.4 * kPi, 1.1 * kPi};
  const EncodingSpec sharp = kDistorted.with_lambda(30.0);
  const std::vector<double> grad = cost_gradient(theta, sharp, lap);
  CHECK(std::abs(grad[0]) < 1e-6);  // theta_0 sits mid-plateau
  CHECK(std::abs(grad[1]) < 1e-6);
}

TEST_CASE("gradient refuses the step encoding") {
  const logq::LaplacianMatrix lap = build_laplacian(logq::example_graph());
  CHECK_THROWS_AS(cost_gradient(ThetaVector(4, 1.0), kStep, lap),
                  std::invalid_argument);
}

TEST_CASE("extract_cut thresholds at 1/2") {
  const logq::CutExtraction cut =
      extract_cut(binary_theta({0, 1, 0, 1}), kStep, 4);
  CHECK(cut.assignment == std::vector<int>{1, -1, 1, -1});
  CHECK(cut.convergence_diag == 0.0);

  const logq::CutExtraction all_plus =
      extract_cut(binary_theta({0, 0, 0, 0}), kStep, 4);
  CHECK(all_plus.assignment == std::vector<int>{1, 1, 1, 1});

  // R near the threshold has to be flagged
  EncodingSpec enc{EncodingKind::Sigmoid, 5.0, 0.2, 0.6};
  const double theta49 = kPi + std::log(0.49 / 0.51) / 5.0;  // R ~ 0.49
  const logq::CutExtraction borderline =
      extract_cut({theta49, 1.6 * kPi, 0.4 * kPi, 0.4 * kPi}, enc, 4);
  CHECK(borderline.assignment[0] == 1);
  CHECK(borderline.convergence_diag == doctest::Approx(0.49).epsilon(1e-6));
}

TEST_CASE("binary configurations: -cost equals the cut value") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const logq::Graph g = logq::gnp_random_graph(n, 0.5, rng());
    const logq::LaplacianMatrix lap = build_laplacian(g);
    std::vector<int> bits(lap.dim());
    for (int& b : bits) b = static_cast<int>(rng() & 1);
    const ThetaVector theta = binary_theta(bits);
    const double cost = cost_closed_form(theta, kStep, lap);
    const logq::CutExtraction cut = extract_cut(theta, kStep, n);
    CHECK(std::abs(cut_value(g, cut.assignment) + cost) < 1e-9);
    // and no binary configuration beats the brute-force optimum
    CHECK(-cost <= brute_force_maxcut(g).best_value + 1e-9);
  }
}
