#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cycinv {

/// Simple undirected graph on vertices 0..m-1 with a dense adjacency matrix.
class Graph {
 public:
  using Edge = std::pair<int, int>;
  using Adjacency = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

  explicit Graph(int vertex_count = 0);
  /// Throws ValidationError on loops, duplicate edges, or out-of-range vertices.
  Graph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(adjacency_.rows()); }
  bool adjacent(int a, int b) const { return adjacency_(a, b) != 0; }
  const Adjacency& adjacency() const { return adjacency_; }

  /// Edges (a, b) with a < b in lexicographic order.
  std::vector<Edge> edges() const;
  std::int64_t edge_count() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.rows() == b.adjacency_.rows() && a.adjacency_ == b.adjacency_;
  }

 private:
  Adjacency adjacency_;
};

/// K_m minus the adjacent edges {k, k+1 mod m} for k = 0..s-1 (0-based).
/// Throws ValidationError unless m >= 3 and 0 <= s <= m.
Graph build_xs(int m, int s);

Graph complement(const Graph& g);

/// Induced subgraph on `vertices` (relabelled 0..|Y|-1 in the given order).
Graph induced(const Graph& g, const std::vector<int>& vertices);

/// Number of connected components, isolated vertices included.
int components(const Graph& g);

/// Parses {"m": int, "edges": [[a,b],...]} with 1-based vertices.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

}  // namespace cycinv
