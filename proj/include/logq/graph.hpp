#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace logq {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

/// Weighted undirected graph. Edges are stored canonically with u < v,
/// no self-loops, no duplicate pairs.
class Graph {
 public:
  Graph() = default;
  Graph(int n_vertices, std::vector<Edge> edges);

  int n_vertices() const { return n_vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t n_edges() const { return edges_.size(); }
  double total_weight() const;

 private:
  int n_vertices_ = 0;
  std::vector<Edge> edges_;
};

/// Parses the edge-list format: a header line "n m" followed by m lines
/// "u v w" with 0-based vertex indices. Lines starting with '#' and blank
/// lines are ignored. Throws std::runtime_error naming the offending line.
Graph parse_edge_list(const std::string& text);

Graph load_edge_list_file(const std::string& path);

/// G(n, p) with every unordered pair included independently with probability
/// `density`. Pairs are visited in row-major order and draws come from a
/// std::mt19937_64 stream seeded with `seed` (doubles via the top 53 bits),
/// so identical (n, density, seed) always produce the same graph.
Graph gnp_random_graph(int n, double density, std::uint64_t seed,
                       double weight = 1.0);

}  // namespace logq
