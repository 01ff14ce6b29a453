#pragma once

#include <cstdint>
#include <vector>

#include "logq/encoding.hpp"
#include "logq/graph.hpp"
#include "logq/state.hpp"

namespace logq {

struct GaConfig {
  int population_size = 20;
  int generations = 20;
  double mutation_rate = 0.1;   // per-gene probability
  double crossover_rate = 0.9;  // per-pair probability
  int elite_count = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

/// A fraction of the evaluation budget paired with a parameter value.
struct SchedulePhase {
  double fraction = 0.0;
  double value = 0.0;
};

struct GradConfig {
  int multistarts = 8;
  /// Objective-call budget for the local optimization (multistart sampling is
  /// on top). 0 picks 100 calls per parameter.
  int max_evals = 0;
  /// Steepness schedule over the budget; whatever fraction remains after
  /// these phases runs at post_lambda as the final refinement.
  std::vector<SchedulePhase> lambda_schedule = {{0.6, 5.0}, {0.3, 6.0}};
  double rhobeg_initial = 3.0;
  /// Trust-radius ceiling per phase, as multipliers of rhobeg_initial.
  std::vector<SchedulePhase> rhobeg_decay = {{0.5, 1.0},
                                             {0.3, 1.0 / 3.0},
                                             {0.2, 0.1}};
  double post_lambda = 30.0;
  double rhoend = 1e-6;
  std::uint64_t seed = 0;

  void validate() const;
};

struct ComplexityCounters {
  int n_qubits = 0;
  int n_params = 0;
  int cnot_estimate = 0;
  std::size_t pauli_terms = 0;
};

struct TracePoint {
  long eval_index = 0;
  double cost = 0.0;
  double best_cost = 0.0;
};

struct SolveResult {
  ThetaVector best_theta;
  std::vector<int> assignment;
  double cut_value = 0.0;
  double final_cost = 0.0;
  std::vector<TracePoint> cost_trace;
  long objective_calls = 0;
  double convergence_diag = 0.0;
  ComplexityCounters complexity;
};

/// Original LogQ: generational GA over theta in [0, 2pi]^{2^N}, tournament
/// selection (size 3), uniform crossover, Gaussian mutation (sigma 0.3,
/// wrapped), elitism. Every individual is evaluated each generation, so
/// objective_calls = population_size * (generations + 1).
SolveResult solve_ga(const Graph& g, const EncodingSpec& enc,
                     const GaConfig& cfg);

/// LogQ-grad: multistart sampling in [0, 2pi]^{2^N}, then one continued
/// trust-region descent through the lambda / rhobeg schedules, a refinement
/// at post_lambda, and a final snap of zero-gradient angles onto the nearest
/// binary plateau (accepted only when it does not worsen the cost).
SolveResult solve_grad(const Graph& g, const EncodingSpec& enc,
                       const GradConfig& cfg);

}  // namespace logq
