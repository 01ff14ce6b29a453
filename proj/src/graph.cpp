#include "logq/graph.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace logq {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw std::runtime_error("edge list parse error at line " +
                           std::to_string(line_no) + ": " + what);
}

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph::Graph(int n_vertices, std::vector<Edge> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
  if (n_vertices_ < 1) throw std::invalid_argument("graph needs >= 1 vertex");
  std::set<std::pair<int, int>> seen;
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_vertices_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop not allowed");
    if (!seen.emplace(e.u, e.v).second)
      throw std::invalid_argument("duplicate edge");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
}

double Graph::total_weight() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.w;
  return s;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  long n = -1, m = -1;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 1 || m < 0)
        parse_fail(line_no, "expected header \"n m\"");
      continue;
    }
    long u, v;
    double w;
    if (!(ls >> u >> v >> w)) parse_fail(line_no, "expected \"u v w\"");
    std::string rest;
    if (ls >> rest) parse_fail(line_no, "trailing tokens after \"u v w\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      parse_fail(line_no, "vertex index out of range");
    if (u == v) parse_fail(line_no, "self-loop");
    auto key = std::minmax(u, v);
    if (!seen.emplace(static_cast<int>(key.first), static_cast<int>(key.second))
             .second)
      parse_fail(line_no, "duplicate edge");
    if (static_cast<long>(edges.size()) >= m)
      parse_fail(line_no, "more edges than declared in header");
    edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
  }
  if (n < 0) throw std::runtime_error("edge list parse error: empty input");
  if (static_cast<long>(edges.size()) != m)
    throw std::runtime_error("edge list parse error: header declares " +
                             std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

Graph gnp_random_graph(int n, double density, std::uint64_t seed,
                       double weight) {
  if (n < 1) throw std::invalid_argument("gnp_random_graph: n must be >= 1");
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("gnp_random_graph: density must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      // Top 53 bits -> uniform double in [0,1); independent of any
      // library distribution implementation.
      double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < density) edges.push_back({u, v, weight});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace logq
