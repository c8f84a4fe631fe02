#include "cycinv/graph.hpp"

#include <json.hpp>
#include <numeric>

#include "cycinv/errors.hpp"

namespace cycinv {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw ValidationError("negative vertex count");
  adjacency_ = Adjacency::Zero(vertex_count, vertex_count);
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) : Graph(vertex_count) {
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
      throw ValidationError("edge endpoint out of range");
    if (a == b) throw ValidationError("loops are not allowed");
    if (adjacency_(a, b)) throw ValidationError("duplicate edge");
    adjacency_(a, b) = adjacency_(b, a) = 1;
  }
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int a = 0; a < vertex_count(); ++a)
    for (int b = a + 1; b < vertex_count(); ++b)
      if (adjacent(a, b)) out.emplace_back(a, b);
  return out;
}

std::int64_t Graph::edge_count() const {
  return adjacency_.cast<std::int64_t>().sum() / 2;
}

Graph build_xs(int m, int s) {
  if (m < 3) throw ValidationError("X[s] needs m >= 3");
  if (s < 0 || s > m) throw ValidationError("X[s] needs 0 <= s <= m");
  std::vector<Graph::Edge> edges;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      // {k, k+1 mod m} is deleted for k < s.
      const bool adjacent_pair = (b == a + 1 && a < s) || (a == 0 && b == m - 1 && s == m);
      if (!adjacent_pair) edges.emplace_back(a, b);
    }
  }
  return Graph(m, edges);
}

Graph complement(const Graph& g) {
  Graph out(g.vertex_count());
  std::vector<Graph::Edge> edges;
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b)
      if (!g.adjacent(a, b)) edges.emplace_back(a, b);
  return Graph(g.vertex_count(), edges);
}

Graph induced(const Graph& g, const std::vector<int>& vertices) {
  const auto k = static_cast<int>(vertices.size());
  std::vector<Graph::Edge> edges;
  for (int a = 0; a < k; ++a) {
    if (vertices[a] < 0 || vertices[a] >= g.vertex_count()) throw ValidationError("vertex out of range");
    for (int b = a + 1; b < k; ++b)
      if (g.adjacent(vertices[a], vertices[b])) edges.emplace_back(a, b);
  }
  return Graph(k, edges);
}

int components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int count = n;
  for (auto [a, b] : g.edges()) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer())
    throw ValidationError("graph JSON needs an integer field \"m\"");
  const auto m = j["m"].get<std::int64_t>();
  if (m < 0 || m > 64) throw ValidationError("graph JSON: m must be in [0, 64]");
  std::vector<Graph::Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ValidationError("graph JSON: \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ValidationError("graph JSON: every edge must be a pair of integers");
      const auto a = e[0].get<std::int64_t>(), b = e[1].get<std::int64_t>();
      if (a < 1 || b < 1 || a > m || b > m) throw ValidationError("graph JSON: vertices are 1-based and at most m");
      edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
  }
  return Graph(static_cast<int>(m), edges);
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["m"] = g.vertex_count();
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [a, b] : g.edges()) j["edges"].push_back({a + 1, b + 1});
  return j.dump();
}

}  // namespace cycinv
