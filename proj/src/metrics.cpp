#include "vpos/metrics.hpp"

#include <algorithm>
#include <limits>

#include "vpos/distance.hpp"

namespace vpos {

namespace {

// Shortest cycle through the BFS root is found when a non-tree edge closes
// two branches; the minimum over all roots is the girth.
std::optional<int> girth_of(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(g.n()), parent(g.n());
  for (int root = 0; root < g.n(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue{root};
    dist[root] = 0;
    parent[root] = -1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      if (2 * dist[v] >= best) break;
      for (int w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v]) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<int> cut_vertices_of(const Graph& g) {
  int n = g.n();
  std::vector<int> num(n, -1), low(n), parent(n, -1), children(n, 0);
  std::vector<char> cut(n, 0);
  int timer = 0;
  // iterative DFS; frame tracks the position within the neighbour list
  std::vector<std::pair<int, size_t>> stack;
  for (int s = 0; s < n; ++s) {
    if (num[s] != -1) continue;
    stack.push_back({s, 0});
    num[s] = low[s] = timer++;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < g.neighbors(v).size()) {
        int w = g.neighbors(v)[idx++];
        if (num[w] == -1) {
          parent[w] = v;
          ++children[v];
          num[w] = low[w] = timer++;
          stack.push_back({w, 0});
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        int done = v;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().first;
          low[p] = std::min(low[p], low[done]);
          if (parent[p] != -1 && low[done] >= num[p]) cut[p] = 1;
        }
      }
    }
    if (children[s] >= 2) cut[s] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (cut[v]) out.push_back(v);
  return out;
}

}  // namespace

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> queue{s};
    seen[s] = 1;
    for (size_t head = 0; head < queue.size(); ++head)
      for (int w : g.neighbors(queue[head]))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    std::sort(queue.begin(), queue.end());
    comps.push_back(std::move(queue));
  }
  return comps;
}

bool is_simplicial(const Graph& g, int v) {
  const auto& nb = g.neighbors(v);
  if (g.has_bitsets()) {
    for (int a : nb) {
      // every other neighbour of v must be adjacent to a
      const auto& va = g.adjacency_bits(v).words();
      const auto& aa = g.adjacency_bits(a).words();
      for (size_t w = 0; w < va.size(); ++w) {
        uint64_t missing = va[w] & ~aa[w];
        if (w == static_cast<size_t>(a >> 6)) missing &= ~(1ULL << (a & 63));
        if (missing) return false;
      }
    }
    return true;
  }
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (!g.has_edge(nb[i], nb[j])) return false;
  return true;
}

std::vector<int> boundary_of(const Graph& g, int x) {
  DistanceLayers bl = bfs_layers(g, x);
  auto dist_or_inf = [&](int v) {
    return bl.dist[v] == DistanceLayers::kUnreachable
               ? std::numeric_limits<long>::max()
               : static_cast<long>(bl.dist[v]);
  };
  std::vector<int> out;
  for (int w = 0; w < g.n(); ++w) {
    bool boundary = true;
    for (int y : g.neighbors(w))
      if (dist_or_inf(y) > dist_or_inf(w)) {
        boundary = false;
        break;
      }
    if (boundary) out.push_back(w);
  }
  return out;
}

std::optional<std::vector<char>> bipartition(const Graph& g) {
  std::vector<char> color(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = static_cast<char>(1 - color[v]);
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

GraphMetrics metrics(const Graph& g) {
  GraphMetrics out;
  int n = g.n();
  if (n == 0) {
    out.girth = std::nullopt;
    return out;
  }
  out.min_degree = std::numeric_limits<int>::max();
  for (int v = 0; v < n; ++v) {
    out.min_degree = std::min(out.min_degree, g.degree(v));
    out.max_degree = std::max(out.max_degree, g.degree(v));
  }

  // eccentricities drive per-component diameter/radius
  std::vector<int> ecc(n, 0);
  for (int v = 0; v < n; ++v) ecc[v] = bfs_layers(g, v).ecc;
  for (auto& comp : connected_components(g)) {
    ComponentInfo info;
    info.diameter = 0;
    info.radius = std::numeric_limits<int>::max();
    for (int v : comp) {
      info.diameter = std::max(info.diameter, ecc[v]);
      info.radius = std::min(info.radius, ecc[v]);
    }
    info.vertices = std::move(comp);
    out.components.push_back(std::move(info));
  }
  out.connected = out.components.size() == 1;
  if (out.connected) {
    out.diameter = out.components[0].diameter;
    out.radius = out.components[0].radius;
  }

  out.girth = girth_of(g);
  for (int v = 0; v < n; ++v)
    if (is_simplicial(g, v)) out.simplicial.push_back(v);
  out.cut_vertices = cut_vertices_of(g);
  out.boundary.resize(n);
  for (int x = 0; x < n; ++x) out.boundary[x] = boundary_of(g, x);
  return out;
}

}  // namespace vpos
