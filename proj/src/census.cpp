#include "vpos/census.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "vpos/metrics.hpp"

namespace vpos {

namespace {

constexpr int kMaxCanonVertices = 11;

struct CanonSearch {
  int n;
  uint32_t adj[kMaxCanonVertices];  // adjacency masks
  int total_bits;
  uint64_t best;
  uint64_t leaves_at_best;
  int perm[kMaxCanonVertices];

  // prefix holds the first `bits` code bits, right-aligned
  void dfs(int pos, uint64_t prefix, int bits, uint32_t used) {
    if (pos == n) {
      if (prefix < best) {
        best = prefix;
        leaves_at_best = 1;
      } else if (prefix == best) {
        ++leaves_at_best;
      }
      return;
    }
    // next column: adjacency of the new vertex against perm[0..pos-1],
    // earlier positions more significant
    struct Cand {
      uint32_t col;
      int v;
    };
    Cand cands[kMaxCanonVertices];
    int nc = 0;
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      uint32_t col = 0;
      for (int i = 0; i < pos; ++i)
        col = (col << 1) | ((adj[v] >> perm[i]) & 1u);
      cands[nc++] = {col, v};
    }
    std::sort(cands, cands + nc, [](const Cand& a, const Cand& b) {
      return a.col != b.col ? a.col < b.col : a.v < b.v;
    });
    for (int c = 0; c < nc; ++c) {
      uint64_t np = (prefix << pos) | cands[c].col;
      int nbits = bits + pos;
      if (np > (best >> (total_bits - nbits))) break;  // sorted: rest worse
      perm[pos] = cands[c].v;
      dfs(pos + 1, np, nbits, used | (1u << cands[c].v));
    }
  }
};

CanonSearch make_search(const Graph& g) {
  if (g.n() > kMaxCanonVertices)
    throw std::invalid_argument("canonical_code supports n <= 11");
  CanonSearch s;
  s.n = g.n();
  for (int v = 0; v < g.n(); ++v) {
    s.adj[v] = 0;
    for (int w : g.neighbors(v)) s.adj[v] |= 1u << w;
  }
  s.total_bits = g.n() * (g.n() - 1) / 2;
  s.best = ~0ULL >> (64 - std::max(1, s.total_bits));
  s.leaves_at_best = 0;
  return s;
}

}  // namespace

uint64_t canonical_code(const Graph& g) {
  if (g.n() <= 1) return 0;
  CanonSearch s = make_search(g);
  s.dfs(0, 0, 0, 0);
  return s.best;
}

Graph graph_from_code(int n, uint64_t code) {
  int total = n * (n - 1) / 2;
  std::vector<Edge> edges;
  int bit = total - 1;  // (0,1) is the most significant bit
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, --bit)
      if ((code >> bit) & 1) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

uint64_t automorphism_count(const Graph& g) {
  if (g.n() <= 1) return 1;
  CanonSearch s = make_search(g);
  s.dfs(0, 0, 0, 0);
  return s.leaves_at_best;
}

namespace {

std::vector<Graph> augment_all(const std::vector<Graph>& prev, int n) {
  std::unordered_set<uint64_t> seen;
  std::vector<std::pair<uint64_t, Graph>> found;
  for (const Graph& g : prev) {
    std::vector<Edge> base = g.edges();
    for (uint32_t subset = 0; subset < (1u << (n - 1)); ++subset) {
      std::vector<Edge> edges = base;
      for (int v = 0; v < n - 1; ++v)
        if (subset & (1u << v)) edges.emplace_back(v, n - 1);
      uint64_t code = canonical_code(Graph::from_edges(n, edges));
      if (seen.insert(code).second) found.emplace_back(code, graph_from_code(n, code));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [code, graph] : found) out.push_back(std::move(graph));
  return out;
}

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("all_graphs supports 1 <= n <= 8");
  static std::mutex mu;
  static std::vector<std::vector<Graph>> cache(9);
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[n].empty()) return cache[n];
  if (cache[1].empty()) cache[1] = {Graph::from_edges(1, {})};
  for (int k = 2; k <= n; ++k)
    if (cache[k].empty()) cache[k] = augment_all(cache[k - 1], k);
  return cache[n];
}

std::vector<Graph> enumerate_small_connected(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumerate_small_connected supports 1 <= n <= 8");
  std::vector<Graph> out;
  for (const Graph& g : all_graphs(n))
    if (connected_components(g).size() == 1) out.push_back(g);
  return out;
}

}  // namespace vpos
