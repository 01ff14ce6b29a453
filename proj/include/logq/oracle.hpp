#pragma once

#include <vector>

#include "logq/graph.hpp"

namespace logq {

inline constexpr int kBruteForceMaxVertices = 24;

struct BruteForceResult {
  double best_value = 0.0;
  std::vector<int> assignment;  // +/-1, first vertex fixed to +1
};

/// Exhaustive MaxCut over all 2^(n-1) sign-symmetric assignments. Ties break
/// to the lowest enumeration index, so the result is deterministic even when
/// the range is partitioned across `threads` workers. Refuses n > 24.
BruteForceResult brute_force_maxcut(const Graph& g, int threads = 1);

}  // namespace logq
