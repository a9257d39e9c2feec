#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vpos/bitset.hpp"

namespace vpos {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1. Neighbour lists are
// sorted; adjacency bitsets are kept alongside for n <= kBitsetLimit so that
// subset tests (simplicial vertices, the oracle's feasibility checks) run on
// words.
class Graph {
 public:
  static constexpr int kBitsetLimit = 512;

  Graph() = default;

  // Validates simplicity: throws std::invalid_argument on self-loops,
  // duplicate edges or out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int m() const { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;
  std::vector<Edge> edges() const;  // u < v, lexicographic

  bool has_bitsets() const { return !bits_.empty(); }
  const Bitset& adjacency_bits(int v) const { return bits_[v]; }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Bitset> bits_;
};

// u~v in the result iff u != v and not u~v in g.
Graph complement(const Graph& g);

// Disjoint union of g1 and g2 (g2 shifted by g1.n()) plus all cross edges.
Graph join(const Graph& g1, const Graph& g2);

}  // namespace vpos
