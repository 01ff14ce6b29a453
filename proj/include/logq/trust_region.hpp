#pragma once

#include <functional>
#include <vector>

namespace logq {

using Objective = std::function<double(const std::vector<double>&)>;

/// Derivative-free bound-constrained minimizer in the COBYLA family. It
/// maintains an interpolation set of dim+1 points, fits a linear model by
/// solving the interpolation system, and takes steepest-descent steps of
/// length rho on the model. rho only ever shrinks: when steps stop improving
/// the incumbent, or when the outer schedule caps it.
class TrustRegionOptimizer {
 public:
  TrustRegionOptimizer(Objective objective, std::vector<double> x0,
                       double lower, double upper, double rhobeg,
                       double rhoend = 1e-6);

  /// Records a known value for x0 so the first run does not re-evaluate it.
  void seed_incumbent_value(double fx0);

  /// Spends up to `budget` further objective calls; stops early once
  /// rho < rhoend. May be called repeatedly to continue.
  void run(int budget);

  /// Swaps the objective (schedule changes). The incumbent is re-evaluated at
  /// the start of the next run (one call); other stored values age out as
  /// points get replaced.
  void set_objective(Objective objective);

  /// Lowers the trust radius ceiling; rho never grows back.
  void cap_rho(double cap);

  const std::vector<double>& best() const { return points_[best_]; }
  double best_value() const { return values_[best_]; }
  long evals_used() const { return evals_; }
  long kick_count() const { return kick_count_; }
  bool converged() const { return rho_ < rhoend_; }
  double rho() const { return rho_; }

 private:
  double eval(const std::vector<double>& x);
  void clamp(std::vector<double>& x) const;
  int worst_index() const;
  int farthest_index(double* distance) const;
  void refresh_best();
  bool model_gradient(std::vector<double>& g) const;

  Objective objective_;
  int dim_;
  double lower_, upper_;
  double rho_, rhoend_;
  std::vector<std::vector<double>> points_;
  std::vector<double> values_;
  int n_ready_ = 0;  // interpolation points built so far
  int best_ = 0;
  bool refresh_needed_ = false;
  int fails_ = 0;
  int kick_cycle_ = 0;
  long kick_count_ = 0;
  long evals_ = 0;
};

struct LocalResult {
  std::vector<double> x;
  double fx = 0.0;
  long evals_used = 0;
};

/// One cold run of the optimizer above. With max_evals = 0 the start point is
/// returned unevaluated (fx is +infinity).
LocalResult local_optimizer(const Objective& objective,
                            const std::vector<double>& x0, double lower,
                            double upper, double rhobeg, int max_evals,
                            double rhoend = 1e-6);

}  // namespace logq
