#include "vpos/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vpos {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw std::invalid_argument("duplicate edge at vertex " +
                                  std::to_string(v));
  }
  g.m_ = static_cast<int>(edges.size());
  if (n <= kBitsetLimit) {
    g.bits_.assign(n, Bitset(n));
    for (int v = 0; v < n; ++v)
      for (int u : g.adj_[v]) g.bits_[v].set(u);
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (!bits_.empty()) return bits_[u].test(v);
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges(g.n(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  int n1 = g1.n(), n2 = g2.n();
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
  return Graph::from_edges(n1 + n2, edges);
}

}  // namespace vpos
