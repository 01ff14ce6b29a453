#include "logq/oracle.hpp"

#include <cstdint>
#include <stdexcept>
#include <thread>

namespace logq {

namespace {

// Vertex 0 is fixed to +1; bit i-1 of the mask flips vertex i.
std::vector<int> mask_to_assignment(std::uint64_t mask, int n) {
  std::vector<int> x(n, 1);
  for (int i = 1; i < n; ++i)
    if ((mask >> (i - 1)) & 1) x[i] = -1;
  return x;
}

struct RangeBest {
  double value = -1.0;
  std::uint64_t mask = 0;
};

RangeBest scan_range(const Graph& g, std::uint64_t begin, std::uint64_t end) {
  RangeBest best;
  const auto& edges = g.edges();
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    double cut = 0.0;
    for (const Edge& e : edges) {
      const int su = e.u == 0 ? 0 : static_cast<int>((mask >> (e.u - 1)) & 1);
      const int sv = e.v == 0 ? 0 : static_cast<int>((mask >> (e.v - 1)) & 1);
      if (su != sv) cut += e.w;
    }
    if (cut > best.value) {
      best.value = cut;
      best.mask = mask;
    }
  }
  return best;
}

}  // namespace

BruteForceResult brute_force_maxcut(const Graph& g, int threads) {
  const int n = g.n_vertices();
  if (n > kBruteForceMaxVertices)
    throw std::invalid_argument(
        "brute_force_maxcut: refusing n > " +
        std::to_string(kBruteForceMaxVertices) + " (got n = " +
        std::to_string(n) + ")");
  const std::uint64_t total = 1ull << (n - 1);

  RangeBest best;
  if (threads <= 1 || total < 4096) {
    best = scan_range(g, 0, total);
  } else {
    const int workers = static_cast<int>(
        std::min<std::uint64_t>(threads, total));
    std::vector<RangeBest> partial(workers);
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
      const std::uint64_t begin = total * t / workers;
      const std::uint64_t end = total * (t + 1) / workers;
      pool.emplace_back(
          [&, t, begin, end] { partial[t] = scan_range(g, begin, end); });
    }
    for (auto& th : pool) th.join();
    best = partial[0];
    for (int t = 1; t < workers; ++t) {
      // Strictly-greater keeps the lowest mask on ties.
      if (partial[t].value > best.value) best = partial[t];
    }
  }

  return {best.value, mask_to_assignment(best.mask, n)};
}

}  // namespace logq
