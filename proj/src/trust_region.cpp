#include "logq/trust_region.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace logq {

namespace {

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TrustRegionOptimizer::TrustRegionOptimizer(Objective objective,
                                           std::vector<double> x0,
                                           double lower, double upper,
                                           double rhobeg, double rhoend)
    : objective_(std::move(objective)),
      dim_(static_cast<int>(x0.size())),
      lower_(lower),
      upper_(upper),
      rho_(rhobeg),
      rhoend_(rhoend) {
  if (dim_ < 1) throw std::invalid_argument("trust region: empty start point");
  if (!(lower < upper)) throw std::invalid_argument("trust region: bad box");
  if (!(rhobeg > 0.0)) throw std::invalid_argument("trust region: rhobeg <= 0");
  clamp(x0);
  points_.assign(dim_ + 1, x0);
  values_.assign(dim_ + 1, std::numeric_limits<double>::infinity());
}

void TrustRegionOptimizer::seed_incumbent_value(double fx0) {
  if (n_ready_ == 0) {
    values_[0] = fx0;
    n_ready_ = 1;
  }
}

void TrustRegionOptimizer::set_objective(Objective objective) {
  objective_ = std::move(objective);
  refresh_needed_ = n_ready_ > 0;
}

void TrustRegionOptimizer::cap_rho(double cap) { rho_ = std::min(rho_, cap); }

double TrustRegionOptimizer::eval(const std::vector<double>& x) {
  const double v = objective_(x);
  ++evals_;
  if (!std::isfinite(v))
    throw std::runtime_error(
        "trust region: objective returned a non-finite value after " +
        std::to_string(evals_) + " evaluations");
  return v;
}

void TrustRegionOptimizer::clamp(std::vector<double>& x) const {
  for (double& xi : x) xi = std::clamp(xi, lower_, upper_);
}

int TrustRegionOptimizer::worst_index() const {
  int w = best_ == 0 ? 1 : 0;
  for (int i = 0; i < dim_ + 1; ++i)
    if (i != best_ && values_[i] > values_[w]) w = i;
  return w;
}

int TrustRegionOptimizer::farthest_index(double* dist_out) const {
  int far = best_ == 0 ? 1 : 0;
  double dfar = -1.0;
  for (int i = 0; i < dim_ + 1; ++i) {
    if (i == best_) continue;
    const double d = distance(points_[i], points_[best_]);
    if (d > dfar) {
      dfar = d;
      far = i;
    }
  }
  *dist_out = dfar;
  return far;
}

void TrustRegionOptimizer::refresh_best() {
  best_ = 0;
  for (int i = 1; i < n_ready_; ++i)
    if (values_[i] < values_[best_]) best_ = i;
}

bool TrustRegionOptimizer::model_gradient(std::vector<double>& g) const {
  Eigen::MatrixXd m(dim_, dim_);
  Eigen::VectorXd rhs(dim_);
  int row = 0;
  for (int i = 0; i < dim_ + 1; ++i) {
    if (i == best_) continue;
    for (int j = 0; j < dim_; ++j)
      m(row, j) = points_[i][j] - points_[best_][j];
    rhs(row) = values_[i] - values_[best_];
    ++row;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  if (qr.rank() < dim_) return false;
  const Eigen::VectorXd sol = qr.solve(rhs);
  g.resize(dim_);
  for (int j = 0; j < dim_; ++j) g[j] = sol(j);
  return true;
}

void TrustRegionOptimizer::run(int budget) {
  int spent = 0;

  // Incumbent value first, if unknown or stale.
  if (n_ready_ == 0 && spent < budget) {
    values_[0] = eval(points_[0]);
    ++spent;
    n_ready_ = 1;
  }
  if (refresh_needed_ && spent < budget) {
    values_[best_] = eval(points_[best_]);
    ++spent;
    refresh_needed_ = false;
    refresh_best();
  }

  while (spent < budget) {
    // Finish building the initial interpolation set. Offsets use the
    // per-coordinate scale of a trust-region step (rho / sqrt(dim)), so the
    // secants sample slopes at the resolution steps will actually move.
    // Probing off the incumbent lets a lucky probe pull the whole build
    // toward better ground at no extra cost.
    if (n_ready_ < dim_ + 1) {
      const int coord = n_ready_ - 1;
      const double h = std::min(rho_ / std::sqrt(static_cast<double>(dim_)),
                                0.5 * (upper_ - lower_));
      std::vector<double> p = points_[best_];
      p[coord] = p[coord] + h <= upper_ ? p[coord] + h : p[coord] - h;
      points_[n_ready_] = p;
      values_[n_ready_] = eval(p);
      ++spent;
      ++n_ready_;
      refresh_best();
      continue;
    }

    if (rho_ < rhoend_) break;

    double dfar = 0.0;
    const int far = farthest_index(&dfar);

    std::vector<double> trial;
    int replace = far;
    bool model_step = false;

    {
      std::vector<double> g;
      if (!model_gradient(g)) {
        ++kick_count_;
        // Degenerate interpolation set: coordinate kick.
        const int k = kick_cycle_ % dim_;
        ++kick_cycle_;
        trial = points_[best_];
        trial[k] = trial[k] + rho_ <= upper_ ? trial[k] + rho_ : trial[k] - rho_;
      } else {
        std::vector<double> d(dim_);
        double gnorm = 0.0;
        for (int j = 0; j < dim_; ++j) {
          d[j] = -g[j];
          gnorm += g[j] * g[j];
        }
        gnorm = std::sqrt(gnorm);
        // Drop components that push out of the box at active bounds.
        const double edge = 1e-12 * (upper_ - lower_);
        for (int j = 0; j < dim_; ++j) {
          if (points_[best_][j] <= lower_ + edge && d[j] < 0.0) d[j] = 0.0;
          if (points_[best_][j] >= upper_ - edge && d[j] > 0.0) d[j] = 0.0;
        }
        double dnorm = 0.0;
        for (double dj : d) dnorm += dj * dj;
        dnorm = std::sqrt(dnorm);
        if (dnorm <= 1e-14 * (1.0 + gnorm)) {
          rho_ *= 0.5;
          fails_ = 0;
          continue;
        }
        trial = points_[best_];
        for (int j = 0; j < dim_; ++j) trial[j] += (rho_ / dnorm) * d[j];
        clamp(trial);
        if (distance(trial, points_[best_]) < 0.01 * rho_) {
          rho_ *= 0.5;
          fails_ = 0;
          continue;
        }
        // Trials land on the trust box around the incumbent, so replacing the
        // farthest point contracts stale geometry without dedicated moves.
        model_step = true;
      }
    }

    const double ft = eval(trial);
    ++spent;

    bool improved = false;
    if (model_step) {
      if (ft < values_[best_] - 1e-12 * (1.0 + std::abs(values_[best_]))) {
        fails_ = 0;
        improved = true;
      } else if (++fails_ >= std::max(6, dim_ / 4)) {
        // The model had a fair number of chances at this radius; tighten.
        rho_ *= 0.6;
        fails_ = 0;
      }
    }

    const std::vector<double> origin = points_[best_];
    points_[replace] = std::move(trial);
    values_[replace] = ft;
    if (values_[replace] < values_[best_]) best_ = replace;

    // A successful model step earns extension probes along the same ray,
    // doubling while they keep paying. Each probe overwrites the previous
    // chain point: stacking several collinear points would make the
    // interpolation system rank-deficient.
    std::vector<double> ray_origin = origin;
    int chain_slot = replace;
    while (improved && spent < budget) {
      std::vector<double> ext(dim_);
      for (int j = 0; j < dim_; ++j)
        ext[j] = points_[best_][j] + (points_[best_][j] - ray_origin[j]);
      clamp(ext);
      if (distance(ext, points_[best_]) <= 0.01 * rho_) break;
      const double fe = eval(ext);
      ++spent;
      improved = fe < values_[best_] - 1e-12 * (1.0 + std::abs(values_[best_]));
      ray_origin = points_[best_];
      if (chain_slot == best_) {
        double dfar2 = 0.0;
        chain_slot = farthest_index(&dfar2);
      }
      points_[chain_slot] = std::move(ext);
      values_[chain_slot] = fe;
      if (values_[chain_slot] < values_[best_]) best_ = chain_slot;
    }
  }
}

LocalResult local_optimizer(const Objective& objective,
                            const std::vector<double>& x0, double lower,
                            double upper, double rhobeg, int max_evals,
                            double rhoend) {
  if (max_evals <= 0) {
    return {x0, std::numeric_limits<double>::infinity(), 0};
  }
  TrustRegionOptimizer opt(objective, x0, lower, upper, rhobeg, rhoend);
  opt.run(max_evals);
  return {opt.best(), opt.best_value(), opt.evals_used()};
}

}  // namespace logq
