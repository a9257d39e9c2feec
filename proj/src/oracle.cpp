#include "vpos/oracle.hpp"

#include <algorithm>
#include <vector>

#include "vpos/distance.hpp"
#include "vpos/matching.hpp"
#include "vpos/metrics.hpp"

namespace vpos {

namespace {

constexpr int32_t kInf = DistanceMatrix::kInf;

struct PxSearch {
  const DistanceMatrix& dm;
  int root;
  std::vector<int> candidates;  // descending degree, then ascending id
  std::vector<int> current, best;
  int cap;  // component upper bound n_comp - e(x)
  uint64_t nodes = 0, max_nodes;

  bool compatible(int v) const {
    for (int u : current)
      if (dm(root, u) + dm(u, v) == dm(root, v) ||
          dm(root, v) + dm(v, u) == dm(root, u))
        return false;
    return true;
  }

  void run(size_t idx) {
    if (++nodes > max_nodes) throw BudgetExceeded("oracle_px node cap hit");
    if (static_cast<int>(best.size()) >= cap) return;
    if (current.size() > best.size()) best = current;
    if (idx == candidates.size()) return;
    if (current.size() + (candidates.size() - idx) <= best.size()) return;
    int v = candidates[idx];
    if (compatible(v)) {
      current.push_back(v);
      run(idx + 1);
      current.pop_back();
    }
    run(idx + 1);
  }
};

}  // namespace

PositionResult oracle_px(const Graph& g, int x, const OracleBudget& budget) {
  if (x < 0 || x >= g.n()) throw std::out_of_range("root out of range");
  PositionResult res;
  res.root = x;
  res.method = SolveMethod::kOracle;
  int n = g.n();
  if (n == 1) return res;

  DistanceLayers bl = bfs_layers(g, x);
  std::vector<int> inside, outside;
  for (int v = 0; v < n; ++v)
    (bl.dist[v] == DistanceLayers::kUnreachable ? outside : inside).push_back(v);

  if (inside.size() == 1) {
    res.witness = outside;
    res.witness.push_back(x);
    std::sort(res.witness.begin(), res.witness.end());
    res.value = static_cast<int>(res.witness.size());
    return res;
  }
  if (static_cast<int>(inside.size()) > budget.max_vertices_px)
    throw BudgetExceeded("component larger than oracle_px budget");

  DistanceMatrix dm(g);
  PxSearch search{dm, x, {}, {}, {},
                  static_cast<int>(inside.size()) - bl.ecc, 0,
                  budget.max_nodes};
  for (int v : inside)
    if (v != x) search.candidates.push_back(v);
  std::stable_sort(search.candidates.begin(), search.candidates.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  search.run(0);

  res.witness = search.best;
  res.witness.insert(res.witness.end(), outside.begin(), outside.end());
  std::sort(res.witness.begin(), res.witness.end());
  res.value = static_cast<int>(res.witness.size());
  return res;
}

namespace {

struct GpSearch {
  const DistanceMatrix& dm;
  std::vector<int> candidates;
  std::vector<int> current;
  int best = 0;
  uint64_t nodes = 0, max_nodes;

  bool compatible(int v) const {
    for (int a : current) {
      for (int b : current) {
        if (a == b) continue;
        // v strictly between a and b
        if (dm(a, v) + dm(v, b) == dm(a, b)) return false;
      }
      // a strictly between v and some member
      for (int b : current) {
        if (a == b) continue;
        if (dm(v, a) + dm(a, b) == dm(v, b)) return false;
      }
    }
    return true;
  }

  void run(size_t idx) {
    if (++nodes > max_nodes) throw BudgetExceeded("oracle_gp node cap hit");
    best = std::max(best, static_cast<int>(current.size()));
    if (idx == candidates.size()) return;
    if (static_cast<int>(current.size() + (candidates.size() - idx)) <= best)
      return;
    int v = candidates[idx];
    if (compatible(v)) {
      current.push_back(v);
      run(idx + 1);
      current.pop_back();
    }
    run(idx + 1);
  }
};

}  // namespace

int oracle_gp(const Graph& g, const OracleBudget& budget) {
  if (g.n() > budget.max_vertices_gp)
    throw BudgetExceeded("graph larger than oracle_gp budget");
  if (g.n() == 0) return 0;
  DistanceMatrix dm(g);
  GpSearch search{dm, {}, {}, 0, 0, budget.max_nodes};
  search.candidates.resize(g.n());
  for (int v = 0; v < g.n(); ++v) search.candidates[v] = v;
  std::stable_sort(search.candidates.begin(), search.candidates.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  search.run(0);
  return search.best;
}

namespace {

struct MisSearch {
  const Graph& g;
  int best = 0;
  uint64_t nodes = 0, max_nodes;

  void run(Bitset allowed, int size) {
    if (++nodes > max_nodes) throw BudgetExceeded("oracle_alpha node cap hit");
    int remaining = allowed.count();
    if (size + remaining <= best) return;
    if (remaining == 0) {
      best = std::max(best, size);
      return;
    }
    // pivot on the max-degree vertex inside the allowed set
    int pivot = -1, pivot_deg = -1;
    allowed.for_each([&](int v) {
      Bitset nb = g.adjacency_bits(v);
      nb &= allowed;
      int d = nb.count();
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    });
    Bitset with = allowed;
    with.reset(pivot);
    {
      Bitset rest = with;
      const auto& nb = g.adjacency_bits(pivot).words();
      for (size_t i = 0; i < rest.words().size(); ++i) rest.words()[i] &= ~nb[i];
      run(rest, size + 1);
    }
    run(with, size);
  }
};

}  // namespace

int oracle_alpha(const Graph& g, const OracleBudget& budget) {
  if (g.n() == 0) return 0;
  if (auto coloring = bipartition(g)) {
    // König: alpha = n - maximum matching
    std::vector<int32_t> left_index(g.n(), -1), right_index(g.n(), -1);
    int nl = 0, nr = 0;
    for (int v = 0; v < g.n(); ++v)
      ((*coloring)[v] == 0 ? left_index[v] : right_index[v]) =
          ((*coloring)[v] == 0 ? nl++ : nr++);
    Csr adj;
    adj.offsets.assign(nl + 1, 0);
    for (int v = 0; v < g.n(); ++v)
      if ((*coloring)[v] == 0) adj.offsets[left_index[v] + 1] = g.degree(v);
    for (int i = 0; i < nl; ++i) adj.offsets[i + 1] += adj.offsets[i];
    adj.targets.resize(adj.offsets[nl]);
    std::vector<int32_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    for (int v = 0; v < g.n(); ++v)
      if ((*coloring)[v] == 0)
        for (int w : g.neighbors(v))
          adj.targets[cursor[left_index[v]]++] = right_index[w];
    return g.n() - hopcroft_karp(nl, nr, adj).size;
  }
  if (g.n() > budget.max_vertices_alpha || !g.has_bitsets())
    throw BudgetExceeded("graph larger than oracle_alpha budget");
  Bitset all(g.n());
  for (int v = 0; v < g.n(); ++v) all.set(v);
  MisSearch search{g, 0, 0, budget.max_nodes};
  search.run(all, 0);
  return search.best;
}

}  // namespace vpos
