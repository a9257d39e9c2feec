#include "vpos/matching.hpp"

#include <limits>

namespace vpos {

namespace {
constexpr int32_t kInf = std::numeric_limits<int32_t>::max();
}

MatchingResult hopcroft_karp(int n_left, int n_right, const Csr& adj) {
  MatchingResult res;
  res.match_left.assign(n_left, -1);
  res.match_right.assign(n_right, -1);

  // greedy warm start
  for (int u = 0; u < n_left; ++u)
    for (int32_t i = adj.offsets[u]; i < adj.offsets[u + 1]; ++i) {
      int v = adj.targets[i];
      if (res.match_right[v] == -1) {
        res.match_left[u] = v;
        res.match_right[v] = u;
        ++res.size;
        break;
      }
    }

  std::vector<int32_t> dist(n_left);
  std::vector<int32_t> queue(n_left);
  std::vector<int32_t> it(n_left);

  auto bfs = [&]() {
    int head = 0, tail = 0;
    for (int u = 0; u < n_left; ++u) {
      if (res.match_left[u] == -1) {
        dist[u] = 0;
        queue[tail++] = u;
      } else {
        dist[u] = kInf;
      }
    }
    bool found = false;
    while (head < tail) {
      int u = queue[head++];
      for (int32_t i = adj.offsets[u]; i < adj.offsets[u + 1]; ++i) {
        int w = res.match_right[adj.targets[i]];
        if (w == -1) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, int u) -> bool {
    for (int32_t& i = it[u]; i < adj.offsets[u + 1]; ++i) {
      int v = adj.targets[i];
      int w = res.match_right[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && self(self, w))) {
        res.match_left[u] = v;
        res.match_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    for (int u = 0; u < n_left; ++u) it[u] = adj.offsets[u];
    for (int u = 0; u < n_left; ++u)
      if (res.match_left[u] == -1 && dfs(dfs, u)) ++res.size;
  }
  return res;
}

VertexCover konig_cover(int n_left, int n_right, const Csr& adj,
                        const MatchingResult& matching) {
  std::vector<char> visited_left(n_left, 0), visited_right(n_right, 0);
  std::vector<int32_t> stack;
  for (int u = 0; u < n_left; ++u)
    if (matching.match_left[u] == -1) {
      visited_left[u] = 1;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int32_t i = adj.offsets[u]; i < adj.offsets[u + 1]; ++i) {
      int v = adj.targets[i];
      if (visited_right[v]) continue;
      visited_right[v] = 1;  // reached along a non-matching edge
      int w = matching.match_right[v];
      if (w != -1 && !visited_left[w]) {
        visited_left[w] = 1;
        stack.push_back(w);
      }
    }
  }
  VertexCover cover;
  cover.left.assign(n_left, 0);
  cover.right.assign(n_right, 0);
  for (int u = 0; u < n_left; ++u) cover.left[u] = !visited_left[u];
  for (int v = 0; v < n_right; ++v) cover.right[v] = visited_right[v];
  return cover;
}

}  // namespace vpos
