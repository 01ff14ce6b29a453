#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "logq/optimize.hpp"
#include "logq/pauli.hpp"
#include "logq/trust_region.hpp"

namespace logq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Stage {
  int evals = 0;
  double lambda = 0.0;
  double rho_cap = 0.0;
};

// Segments the eval budget at the union of the lambda and rhobeg breakpoints.
std::vector<Stage> merge_schedules(int budget, const GradConfig& cfg) {
  std::vector<std::pair<double, double>> lam;  // (cumulative fraction, lambda)
  double cum = 0.0;
  for (const SchedulePhase& p : cfg.lambda_schedule) {
    cum += p.fraction;
    lam.push_back({std::min(cum, 1.0), p.value});
  }
  if (cum < 1.0 - 1e-12) lam.push_back({1.0, cfg.post_lambda});

  std::vector<std::pair<double, double>> rho;  // (cumulative fraction, cap)
  cum = 0.0;
  for (const SchedulePhase& p : cfg.rhobeg_decay) {
    cum += p.fraction;
    rho.push_back({std::min(cum, 1.0), cfg.rhobeg_initial * p.value});
  }
  if (rho.empty() || rho.back().first < 1.0)
    rho.push_back({1.0, rho.empty() ? cfg.rhobeg_initial : rho.back().second});

  std::vector<Stage> stages;
  std::size_t li = 0, ri = 0;
  int spent = 0;
  double prev = 0.0;
  while (li < lam.size() && ri < rho.size()) {
    const double next = std::min(lam[li].first, rho[ri].first);
    const int end = std::min<int>(
        budget, static_cast<int>(std::llround(next * budget)));
    if (end > spent)
      stages.push_back({end - spent, lam[li].second, rho[ri].second});
    spent = std::max(spent, end);
    if (lam[li].first <= next + 1e-15) ++li;
    if (rho[ri].first <= next + 1e-15) ++ri;
    prev = next;
    if (prev >= 1.0) break;
  }
  if (spent < budget && !stages.empty()) stages.back().evals += budget - spent;
  return stages;
}

// Rounds angles onto a binary plateau center, accepting each move only if
// the exact cost delta is non-positive. Saturated angles re-center on their
// own side; an angle still mid-transition is uncommitted, so both sides are
// candidates. Covers coordinates the optimizer cannot move at all (isolated
// vertices, balanced neighborhoods) where the gradient is identically zero.
void snap_to_plateaus(ThetaVector& theta, const EncodingSpec& enc,
                      const LaplacianMatrix& lap) {
  const int dim = lap.dim();
  const double t_zero = 0.5 * kPi * (1.0 - enc.kappa);
  const double t_one = 0.5 * kPi * (3.0 + enc.kappa);
  std::vector<double> r(dim);
  for (int z = 0; z < dim; ++z) r[z] = enc.r(theta[z]);

  auto delta_for = [&](int z, double target_r) {
    double delta = 0.0;
    for (int w = 0; w < dim; ++w) {
      if (w == z) continue;
      const double lwz = lap.entries(w, z);
      if (lwz != 0.0)
        delta -= 0.5 * lwz * (std::cos(kPi * (r[w] - target_r)) -
                              std::cos(kPi * (r[w] - r[z])));
    }
    return delta;
  };

  for (int sweep = 0; sweep < 3; ++sweep) {
    bool changed = false;
    for (int z = 0; z < dim; ++z) {
      const bool committed = std::min(r[z], 1.0 - r[z]) <= 0.02;
      double target_theta = r[z] < 0.5 ? t_zero : t_one;
      double delta = delta_for(z, enc.r(target_theta));
      if (!committed) {
        const double other_theta = r[z] < 0.5 ? t_one : t_zero;
        const double other_delta = delta_for(z, enc.r(other_theta));
        if (other_delta < delta) {
          target_theta = other_theta;
          delta = other_delta;
        }
      }
      if (theta[z] == target_theta) continue;
      if (delta <= 1e-12) {
        theta[z] = target_theta;
        r[z] = enc.r(target_theta);
        changed = true;
      }
    }
    if (!changed) break;
  }
}

}  // namespace

void GradConfig::validate() const {
  if (multistarts < 1)
    throw std::invalid_argument("grad: multistarts must be >= 1");
  if (max_evals < 0)
    throw std::invalid_argument("grad: max_evals must be >= 0");
  if (!(rhobeg_initial > 0.0))
    throw std::invalid_argument("grad: rhobeg_initial must be positive");
  if (!(rhoend > 0.0))
    throw std::invalid_argument("grad: rhoend must be positive");
  double frac = 0.0;
  for (const SchedulePhase& p : lambda_schedule) {
    if (p.fraction < 0.0 || p.value <= 0.0)
      throw std::invalid_argument("grad: bad lambda schedule phase");
    frac += p.fraction;
  }
  if (frac > 1.0 + 1e-12)
    throw std::invalid_argument("grad: lambda schedule exceeds the budget");
  for (const SchedulePhase& p : rhobeg_decay)
    if (p.fraction < 0.0 || p.value <= 0.0)
      throw std::invalid_argument("grad: bad rhobeg decay phase");
}

SolveResult solve_grad(const Graph& g, const EncodingSpec& enc,
                       const GradConfig& cfg) {
  enc.validate();
  cfg.validate();
  const LaplacianMatrix lap = build_laplacian(g);
  const int dim = lap.dim();
  const int budget = cfg.max_evals > 0 ? cfg.max_evals : 100 * dim;

  SolveResult result;
  double running_best = std::numeric_limits<double>::infinity();
  auto make_objective = [&](double lambda) {
    const EncodingSpec stage_enc = enc.with_lambda(lambda);
    return [&result, &running_best, stage_enc, &lap](const ThetaVector& th) {
      const double c = cost_closed_form(th, stage_enc, lap);
      ++result.objective_calls;
      running_best = std::min(running_best, c);
      result.cost_trace.push_back({result.objective_calls, c, running_best});
      return c;
    };
  };

  const double lambda0 = cfg.lambda_schedule.empty()
                             ? cfg.post_lambda
                             : cfg.lambda_schedule.front().value;
  Objective objective = make_objective(lambda0);

  // Multistart: sample in [0, 2pi]^dim (each replica owns the stream seeded
  // seed + index) and rank the samples by cost, earlier replicas first on
  // ties.
  std::vector<std::pair<double, ThetaVector>> samples;
  samples.reserve(cfg.multistarts);
  for (int replica = 0; replica < cfg.multistarts; ++replica) {
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(replica));
    ThetaVector theta(dim);
    for (double& t : theta)
      t = static_cast<double>(rng() >> 11) * 0x1.0p-53 * kTwoPi;
    const double c = objective(theta);
    samples.emplace_back(c, std::move(theta));
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  const EncodingSpec final_enc = enc.with_lambda(cfg.post_lambda);
  const double box_lo = -enc.gamma * kPi;
  const double box_hi = (2.0 + enc.gamma) * kPi;

  // Descend from the best sample; when the trust region converges with budget
  // to spare, restart from the next-ranked sample (then fresh draws) and keep
  // the best round.
  ThetaVector best_theta;
  double best_final = std::numeric_limits<double>::infinity();
  int remaining = budget;
  for (int round = 0; remaining >= dim + 2 || (round == 0 && remaining > 0);
       ++round) {
    ThetaVector start;
    bool have_value = false;
    double start_value = 0.0;
    if (round < static_cast<int>(samples.size())) {
      start = samples[round].second;
      start_value = samples[round].first;
      have_value = true;
    } else {
      std::mt19937_64 rng(cfg.seed +
                          static_cast<std::uint64_t>(cfg.multistarts + round));
      start.resize(dim);
      for (double& t : start)
        t = static_cast<double>(rng() >> 11) * 0x1.0p-53 * kTwoPi;
    }

    TrustRegionOptimizer opt(make_objective(lambda0), start, box_lo, box_hi,
                             cfg.rhobeg_initial, cfg.rhoend);
    if (have_value) opt.seed_incumbent_value(start_value);

    // Rounds are capped so a generous budget funds several descents instead
    // of grinding one basin at ever-finer resolution.
    const int allotment = std::min(remaining, std::max(40 * dim, dim + 2));
    double current_lambda = lambda0;
    const long calls_before = result.objective_calls;
    for (const Stage& stage : merge_schedules(allotment, cfg)) {
      if (opt.converged()) break;
      if (stage.lambda != current_lambda) {
        opt.set_objective(make_objective(stage.lambda));
        current_lambda = stage.lambda;
      }
      opt.cap_rho(stage.rho_cap);
      opt.run(stage.evals);
    }
    remaining -= static_cast<int>(result.objective_calls - calls_before);
    if (std::getenv("LOGQ_DEBUG_ROUNDS"))
      std::fprintf(stderr, "round %d spent %ld remaining %d converged %d\n",
                   round, result.objective_calls - calls_before, remaining,
                   (int)opt.converged());

    ThetaVector theta = opt.best();
    snap_to_plateaus(theta, final_enc, lap);
    const double final_cost = cost_closed_form(theta, final_enc, lap);
    if (final_cost < best_final) {
      best_final = final_cost;
      best_theta = std::move(theta);
    }
    if (remaining <= 0) break;
  }

  result.best_theta = best_theta;
  result.final_cost = best_final;
  const ThetaVector theta = best_theta;
  const CutExtraction cut = extract_cut(theta, final_enc, g.n_vertices());
  result.assignment = cut.assignment;
  result.convergence_diag = cut.convergence_diag;
  result.cut_value = cut_value(g, result.assignment);
  result.complexity = {lap.n_qubits(), dim, dim,
                       decompose(lap).terms.size()};
  return result;
}

}  // namespace logq
