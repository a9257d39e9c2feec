#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "vpos/matching.hpp"
#include "vpos/rng.hpp"

using namespace vpos;

namespace {

Csr random_bipartite(int nl, int nr, double p, SplitMix64& rng) {
  Csr adj;
  adj.offsets.assign(nl + 1, 0);
  std::vector<std::vector<int32_t>> rows(nl);
  for (int u = 0; u < nl; ++u)
    for (int v = 0; v < nr; ++v)
      if (rng.unit() < p) rows[u].push_back(v);
  for (int u = 0; u < nl; ++u) adj.offsets[u + 1] = adj.offsets[u] + rows[u].size();
  for (int u = 0; u < nl; ++u)
    for (int32_t v : rows[u]) adj.targets.push_back(v);
  return adj;
}

// simple augmenting-path reference
int kuhn_matching(int nl, int nr, const Csr& adj) {
  std::vector<int> match_right(nr, -1);
  std::vector<char> used;
  auto try_augment = [&](auto&& self, int u) -> bool {
    for (int32_t i = adj.offsets[u]; i < adj.offsets[u + 1]; ++i) {
      int v = adj.targets[i];
      if (used[v]) continue;
      used[v] = 1;
      if (match_right[v] == -1 || self(self, match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int u = 0; u < nl; ++u) {
    used.assign(nr, 0);
    if (try_augment(try_augment, u)) ++size;
  }
  return size;
}

}  // namespace

TEST_CASE("hopcroft-karp matches the augmenting-path reference") {
  SplitMix64 rng(101);
  for (int i = 0; i < 200; ++i) {
    int nl = 1 + static_cast<int>(rng.below(30));
    int nr = 1 + static_cast<int>(rng.below(30));
    Csr adj = random_bipartite(nl, nr, rng.unit(), rng);
    MatchingResult m = hopcroft_karp(nl, nr, adj);
    CHECK(m.size == kuhn_matching(nl, nr, adj));
    // the stored matching is consistent
    int paired = 0;
    for (int u = 0; u < nl; ++u)
      if (m.match_left[u] != -1) {
        ++paired;
        CHECK(m.match_right[m.match_left[u]] == u);
      }
    CHECK(paired == m.size);
  }
}

TEST_CASE("könig cover has matching size and covers every edge") {
  SplitMix64 rng(103);
  for (int i = 0; i < 200; ++i) {
    int nl = 1 + static_cast<int>(rng.below(25));
    int nr = 1 + static_cast<int>(rng.below(25));
    Csr adj = random_bipartite(nl, nr, rng.unit() * 0.5, rng);
    MatchingResult m = hopcroft_karp(nl, nr, adj);
    VertexCover cover = konig_cover(nl, nr, adj, m);
    int size = 0;
    for (char c : cover.left) size += c;
    for (char c : cover.right) size += c;
    CHECK(size == m.size);
    for (int u = 0; u < nl; ++u)
      for (int32_t j = adj.offsets[u]; j < adj.offsets[u + 1]; ++j)
        CHECK((cover.left[u] || cover.right[adj.targets[j]]));
  }
}

TEST_CASE("deterministic matchings") {
  SplitMix64 rng(107);
  Csr adj = random_bipartite(20, 20, 0.3, rng);
  MatchingResult a = hopcroft_karp(20, 20, adj);
  MatchingResult b = hopcroft_karp(20, 20, adj);
  CHECK(a.match_left == b.match_left);
  CHECK(a.match_right == b.match_right);
}
