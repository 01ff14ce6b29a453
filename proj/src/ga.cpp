#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "logq/optimize.hpp"
#include "logq/pauli.hpp"

namespace logq {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void GaConfig::validate() const {
  if (population_size < 1)
    throw std::invalid_argument("ga: population_size must be >= 1");
  if (generations < 0)
    throw std::invalid_argument("ga: generations must be >= 0");
  if (mutation_rate < 0.0 || mutation_rate > 1.0 || crossover_rate < 0.0 ||
      crossover_rate > 1.0)
    throw std::invalid_argument("ga: rates must be in [0,1]");
  if (elite_count < 0 || elite_count >= population_size)
    throw std::invalid_argument("ga: need 0 <= elite_count < population_size");
}

SolveResult solve_ga(const Graph& g, const EncodingSpec& enc,
                     const GaConfig& cfg) {
  cfg.validate();
  const LaplacianMatrix lap = build_laplacian(g);
  const int dim = lap.dim();

  SolveResult result;
  ThetaVector best_theta;
  double best_cost = std::numeric_limits<double>::infinity();

  auto objective = [&](const ThetaVector& theta) {
    const double c = cost_closed_form(theta, enc, lap);
    ++result.objective_calls;
    if (c < best_cost) {
      best_cost = c;
      best_theta = theta;
    }
    result.cost_trace.push_back({result.objective_calls, c, best_cost});
    return c;
  };

  std::mt19937_64 rng(cfg.seed);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::normal_distribution<double> gauss(0.0, 0.3);

  std::vector<ThetaVector> pop(cfg.population_size, ThetaVector(dim));
  std::vector<double> fitness(cfg.population_size);
  for (auto& ind : pop)
    for (double& gene : ind) gene = unit() * kTwoPi;
  for (int i = 0; i < cfg.population_size; ++i) fitness[i] = objective(pop[i]);

  auto tournament = [&]() -> int {
    int winner = -1;
    for (int t = 0; t < 3; ++t) {
      const int c = static_cast<int>(rng() % cfg.population_size);
      if (winner < 0 || fitness[c] < fitness[winner]) winner = c;
    }
    return winner;
  };

  auto mutate = [&](ThetaVector& ind) {
    for (double& gene : ind) {
      if (unit() < cfg.mutation_rate) {
        gene += gauss(rng);
        gene -= kTwoPi * std::floor(gene / kTwoPi);
      }
    }
  };

  for (int gen = 0; gen < cfg.generations; ++gen) {
    std::vector<int> order(cfg.population_size);
    for (int i = 0; i < cfg.population_size; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return fitness[a] != fitness[b] ? fitness[a] < fitness[b] : a < b;
    });

    std::vector<ThetaVector> next;
    next.reserve(cfg.population_size);
    for (int e = 0; e < cfg.elite_count; ++e) next.push_back(pop[order[e]]);

    while (static_cast<int>(next.size()) < cfg.population_size) {
      ThetaVector child1 = pop[tournament()];
      ThetaVector child2 = pop[tournament()];
      if (unit() < cfg.crossover_rate) {
        for (int j = 0; j < dim; ++j)
          if (unit() < 0.5) std::swap(child1[j], child2[j]);
      }
      mutate(child1);
      mutate(child2);
      next.push_back(std::move(child1));
      if (static_cast<int>(next.size()) < cfg.population_size)
        next.push_back(std::move(child2));
    }

    pop = std::move(next);
    for (int i = 0; i < cfg.population_size; ++i)
      fitness[i] = objective(pop[i]);
  }

  result.best_theta = best_theta;
  result.final_cost = best_cost;
  const CutExtraction cut = extract_cut(best_theta, enc, g.n_vertices());
  result.assignment = cut.assignment;
  result.convergence_diag = cut.convergence_diag;
  result.cut_value = cut_value(g, result.assignment);
  result.complexity = {lap.n_qubits(), dim, dim,
                       decompose(lap).terms.size()};
  return result;
}

}  // namespace logq
