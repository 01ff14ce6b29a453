#include "logq/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 1 / (1 + exp(-x)) without overflow for any x.
double logistic(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

double r_step(double theta) {
  if (theta < 0.0 || theta > kTwoPi)
    theta -= kTwoPi * std::floor(theta / kTwoPi);
  return theta < kPi ? 0.0 : 1.0;
}

double r_sigmoid(double theta, double lambda) {
  return logistic(lambda * (theta - kPi));
}

double r_sigmoid_derivative(double theta, double lambda) {
  const double s = r_sigmoid(theta, lambda);
  return lambda * s * (1.0 - s);
}

double r_distorted(double theta, double lambda, double kappa, double gamma) {
  theta = std::clamp(theta, -gamma * kPi, (2.0 + gamma) * kPi);
  const double rise_mid = logistic(lambda * (theta - kPi));
  const double fall_right = logistic(lambda * ((2.0 + kappa) * kPi - theta));
  const double fall_left = logistic(-lambda * (theta + kappa * kPi));
  return rise_mid * fall_right + fall_left;
}

double r_distorted_derivative(double theta, double lambda, double kappa,
                              double gamma) {
  theta = std::clamp(theta, -gamma * kPi, (2.0 + gamma) * kPi);
  const double a = logistic(lambda * (theta - kPi));
  const double b = logistic(lambda * ((2.0 + kappa) * kPi - theta));
  const double c = logistic(-lambda * (theta + kappa * kPi));
  return lambda * (a * (1.0 - a) * b - a * b * (1.0 - b) - c * (1.0 - c));
}

void EncodingSpec::validate() const {
  if (!(lambda > 0.0))
    throw std::invalid_argument("encoding: lambda must be positive");
  if (!(kappa >= 0.0 && kappa < gamma && gamma <= 1.0))
    throw std::invalid_argument("encoding: need 0 <= kappa < gamma <= 1");
}

double EncodingSpec::theta_min() const {
  return kind == EncodingKind::Step ? 0.0 : -gamma * kPi;
}

double EncodingSpec::theta_max() const {
  return kind == EncodingKind::Step ? kTwoPi : (2.0 + gamma) * kPi;
}

double EncodingSpec::r(double theta) const {
  switch (kind) {
    case EncodingKind::Step:
      return r_step(theta);
    case EncodingKind::Sigmoid:
      return r_sigmoid(theta, lambda);
    case EncodingKind::DistortedSigmoid:
      return r_distorted(theta, lambda, kappa, gamma);
  }
  throw std::logic_error("encoding: unknown kind");
}

double EncodingSpec::r_derivative(double theta) const {
  switch (kind) {
    case EncodingKind::Step:
      throw std::invalid_argument(
          "encoding: step R has no usable derivative (null almost everywhere)");
    case EncodingKind::Sigmoid:
      return r_sigmoid_derivative(theta, lambda);
    case EncodingKind::DistortedSigmoid:
      return r_distorted_derivative(theta, lambda, kappa, gamma);
  }
  throw std::logic_error("encoding: unknown kind");
}

EncodingSpec EncodingSpec::with_lambda(double new_lambda) const {
  EncodingSpec out = *this;
  out.lambda = new_lambda;
  return out;
}

}  // namespace logq
