#pragma once

namespace logq {

enum class EncodingKind { Step, Sigmoid, DistortedSigmoid };

/// Hard step encoding: 0 on [0, pi), 1 on [pi, 2pi]. Values outside [0, 2pi]
/// are wrapped modulo 2pi first.
double r_step(double theta);

/// Smooth step 1 / (1 + exp(lambda (pi - theta))), overflow-safe.
double r_sigmoid(double theta, double lambda);
double r_sigmoid_derivative(double theta, double lambda);

/// Sigmoid with distorted edges on [-gamma pi, (2+gamma) pi]: an extra fall
/// back to 0 past (2+kappa) pi and a rise to 1 before -kappa pi, so the flat
/// regions at 0 and 1 stay bounded inside the optimizer's box. Arguments
/// outside the box are clamped to its endpoints.
double r_distorted(double theta, double lambda, double kappa,
                   double gamma = 0.6);
double r_distorted_derivative(double theta, double lambda, double kappa,
                              double gamma = 0.6);

/// Which R function to use and its parameters.
struct EncodingSpec {
  EncodingKind kind = EncodingKind::DistortedSigmoid;
  double lambda = 5.0;
  double kappa = 0.2;
  double gamma = 0.6;

  void validate() const;  // lambda > 0 and 0 <= kappa < gamma <= 1

  double theta_min() const;
  double theta_max() const;
  bool differentiable() const { return kind != EncodingKind::Step; }

  double r(double theta) const;
  /// Analytic dR/dtheta. Throws for the Step kind (null almost everywhere).
  double r_derivative(double theta) const;

  EncodingSpec with_lambda(double new_lambda) const;
};

}  // namespace logq
