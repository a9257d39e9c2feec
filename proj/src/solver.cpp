#include "vpos/solver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "vpos/matching.hpp"
#include "vpos/metrics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vpos {

namespace {

constexpr int32_t kInf = DistanceMatrix::kInf;

void bfs_into(const Graph& g, int src, std::vector<int32_t>& row,
              std::vector<int>& queue) {
  row.assign(g.n(), kInf);
  row[src] = 0;
  queue.clear();
  queue.push_back(src);
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.neighbors(v))
      if (row[w] == kInf) {
        row[w] = row[v] + 1;
        queue.push_back(w);
      }
  }
}

void fill_successors(Bitset& succ, std::span<const int32_t> du,
                     std::span<const int32_t> dx, int32_t c, int n, int u) {
  auto& words = succ.words();
  for (int base = 0; base < n; base += 64) {
    uint64_t bits = 0;
    int lim = std::min(64, n - base);
    for (int b = 0; b < lim; ++b)
      bits |= static_cast<uint64_t>(du[base + b] + c == dx[base + b]) << b;
    words[base >> 6] = bits;
  }
  succ.reset(u);  // the identity holds trivially at v == u
}

struct AntichainStats {
  std::vector<int> antichain;
  int ground = 0;
  int matching = 0;
};

AntichainStats antichain_with_stats(const GeodesicOrder& order) {
  AntichainStats out;
  int n = static_cast<int>(order.succ.size());
  std::vector<int> elems;
  elems.reserve(order.component.size());
  for (int v : order.component)
    if (v != order.root) elems.push_back(v);
  int k = static_cast<int>(elems.size());
  out.ground = k;
  if (k == 0) return out;

  std::vector<int32_t> index(n, -1);
  for (int i = 0; i < k; ++i) index[elems[i]] = i;

  Csr adj;
  adj.offsets.assign(k + 1, 0);
  for (int i = 0; i < k; ++i) adj.offsets[i + 1] = order.succ[elems[i]].count();
  for (int i = 0; i < k; ++i) adj.offsets[i + 1] += adj.offsets[i];
  adj.targets.resize(adj.offsets[k]);
  {
    std::vector<int32_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    for (int i = 0; i < k; ++i)
      order.succ[elems[i]].for_each(
          [&](int v) { adj.targets[cursor[i]++] = index[v]; });
  }

  MatchingResult matching = hopcroft_karp(k, k, adj);
  out.matching = matching.size;
  VertexCover cover = konig_cover(k, k, adj, matching);
  for (int i = 0; i < k; ++i)
    if (!cover.left[i] && !cover.right[i]) out.antichain.push_back(elems[i]);
  if (static_cast<int>(out.antichain.size()) != k - matching.size)
    throw std::logic_error("antichain size disagrees with Dilworth count");
  return out;
}

GeodesicOrder build_order(const Graph& g, int x, const DistanceMatrix* dm) {
  if (x < 0 || x >= g.n()) throw std::out_of_range("root out of range");
  int n = g.n();
  GeodesicOrder order;
  order.root = x;
  order.succ.assign(n, Bitset());

  std::vector<int32_t> dx_local;
  std::vector<int> queue;
  std::span<const int32_t> dx;
  if (dm) {
    dx = dm->row(x);
  } else {
    bfs_into(g, x, dx_local, queue);
    dx = dx_local;
  }
  for (int v = 0; v < n; ++v)
    if (dx[v] < kInf) order.component.push_back(v);

  std::vector<int32_t> du_local;
  for (int u : order.component) {
    if (u == x) continue;
    order.succ[u] = Bitset(n);
    std::span<const int32_t> du;
    if (dm) {
      du = dm->row(u);
    } else {
      bfs_into(g, u, du_local, queue);
      du = du_local;
    }
    fill_successors(order.succ[u], du, dx, dx[u], n, u);
  }
  return order;
}

void check_order_shape(const GeodesicOrder& order) {
  for (int u : order.component) {
    if (u == order.root) continue;
    order.succ[u].for_each([&](int v) {
      if (order.succ[v].size() > 0 && order.succ[v].test(u))
        throw std::logic_error("geodesic order not antisymmetric");
      if (order.succ[v].size() > 0 && !order.succ[v].subset_of(order.succ[u]))
        throw std::logic_error("geodesic order not transitive");
    });
  }
}

}  // namespace

GeodesicOrder geodesic_order(const Graph& g, int x) {
  return build_order(g, x, nullptr);
}

GeodesicOrder geodesic_order(const Graph& g, int x, const DistanceMatrix& dm) {
  return build_order(g, x, &dm);
}

std::vector<int> max_antichain(const GeodesicOrder& order) {
  return antichain_with_stats(order).antichain;
}

namespace {

PositionResult solve_px_impl(const Graph& g, int x, const DistanceMatrix* dm,
                             const SolveOptions& opt) {
  if (x < 0 || x >= g.n()) throw std::out_of_range("root out of range");
  int n = g.n();
  PositionResult res;
  res.root = x;
  if (n == 1) return res;  // single-vertex graph: empty set, value 0

  GeodesicOrder order = build_order(g, x, dm);

  std::vector<int> outside;
  {
    std::vector<char> in_comp(n, 0);
    for (int v : order.component) in_comp[v] = 1;
    for (int v = 0; v < n; ++v)
      if (!in_comp[v]) outside.push_back(v);
  }

  AntichainStats stats;
  if (order.component.size() == 1) {
    // isolated root in a larger graph: no x,y-paths exist at all, so the
    // root itself joins the set
    res.witness.push_back(x);
  } else {
    stats = antichain_with_stats(order);
    res.witness = stats.antichain;
  }
  res.witness.insert(res.witness.end(), outside.begin(), outside.end());
  std::sort(res.witness.begin(), res.witness.end());
  res.value = static_cast<int>(res.witness.size());

  if (opt.self_check) {
    check_order_shape(order);
    if (order.component.size() > 1 &&
        static_cast<int>(stats.antichain.size()) + stats.matching != stats.ground)
      throw std::logic_error("Dilworth count identity violated");
    for (int a : stats.antichain)
      for (int b : stats.antichain)
        if (a != b && order.less(a, b))
          throw std::logic_error("antichain contains comparable pair");
    bool sound = dm ? verify_position_set(*dm, x, res.witness)
                    : verify_position_set(g, x, res.witness);
    if (!sound) throw std::logic_error("witness failed position-set check");
    SolveOptions plain;
    PositionResult reduced = solve_px(reduced_graph(g, x), x, plain);
    if (reduced.value != res.value)
      throw std::logic_error("p_x changed under same-layer edge reduction");
  }
  return res;
}

}  // namespace

PositionResult solve_px(const Graph& g, int x, const SolveOptions& opt) {
  return solve_px_impl(g, x, nullptr, opt);
}

PositionResult solve_px(const Graph& g, int x, const DistanceMatrix& dm,
                        const SolveOptions& opt) {
  return solve_px_impl(g, x, &dm, opt);
}

VpSummary solve_all(const Graph& g, const SolveOptions& opt) {
  VpSummary out;
  int n = g.n();
  if (n == 0) return out;
  int threads = opt.threads;
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#else
  threads = 1;
#endif

  DistanceMatrix dm(g, threads);
  out.p.assign(n, 0);
  std::vector<std::string> errors(n);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
#endif
  for (int x = 0; x < n; ++x) {
    try {
      out.p[x] = solve_px_impl(g, x, &dm, opt).value;
    } catch (const std::exception& e) {
      errors[x] = e.what();
    }
  }
  for (int x = 0; x < n; ++x)
    if (!errors[x].empty()) throw std::logic_error(errors[x]);

  out.vp = *std::max_element(out.p.begin(), out.p.end());
  out.vp_minus = *std::min_element(out.p.begin(), out.p.end());
  for (int x = 0; x < n; ++x) {
    if (out.p[x] == out.vp) out.argmax.push_back(x);
    if (out.p[x] == out.vp_minus) out.argmin.push_back(x);
  }
  return out;
}

namespace {

bool verify_impl(int x, std::span<const int> s, int n,
                 const std::function<std::span<const int32_t>(int)>& row) {
  std::vector<int> members(s.begin(), s.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int v : members)
    if (v < 0 || v >= n) throw std::out_of_range("set member out of range");

  std::span<const int32_t> dx = row(x);
  for (int y : members) {
    if (dx[y] >= kInf) continue;  // other component: nothing lies between
    for (int z : members) {
      if (z == y) continue;
      std::span<const int32_t> dz = row(z);
      if (dx[z] + dz[y] == dx[y]) return false;
    }
  }
  return true;
}

}  // namespace

bool verify_position_set(const Graph& g, int x, std::span<const int> s) {
  if (x < 0 || x >= g.n()) throw std::out_of_range("root out of range");
  // BFS rows on demand, cached per distinct source
  std::vector<std::vector<int32_t>> rows(g.n());
  std::vector<int> queue;
  auto row = [&](int v) -> std::span<const int32_t> {
    if (rows[v].empty()) bfs_into(g, v, rows[v], queue);
    return rows[v];
  };
  return verify_impl(x, s, g.n(), row);
}

bool verify_position_set(const DistanceMatrix& dm, int x,
                         std::span<const int> s) {
  if (x < 0 || x >= dm.n()) throw std::out_of_range("root out of range");
  auto row = [&](int v) -> std::span<const int32_t> { return dm.row(v); };
  return verify_impl(x, s, dm.n(), row);
}

Graph reduced_graph(const Graph& g, int x) {
  DistanceLayers bl = bfs_layers(g, x);
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges()) {
    bool both_reached = bl.dist[u] != DistanceLayers::kUnreachable &&
                        bl.dist[v] != DistanceLayers::kUnreachable;
    if (both_reached && bl.dist[u] == bl.dist[v]) continue;
    kept.emplace_back(u, v);
  }
  return Graph::from_edges(g.n(), kept);
}

std::vector<int> boundary_position_set(const Graph& g, int x) {
  return boundary_of(g, x);
}

std::vector<Edge> comparability_edges_reference(const Graph& g, int x) {
  DistanceLayers bl = bfs_layers(g, x);
  int n = g.n();
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges())
    if (bl.dist[u] != bl.dist[v]) {
      adj[u].insert(v);
      adj[v].insert(u);
    }
  for (int u = 0; u < n; ++u) {
    if (u == x) continue;
    std::vector<char> in_r(n, 0);
    in_r[u] = 1;
    std::deque<int> q{u};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      std::vector<int> snapshot(adj[v].begin(), adj[v].end());
      for (int w : snapshot) {
        if (in_r[w] || bl.dist[w] <= bl.dist[v]) continue;
        q.push_back(w);
        in_r[w] = 1;
        if (bl.dist[w] > bl.dist[u] + 1) {
          adj[u].insert(w);
          adj[w].insert(u);
        }
      }
    }
  }
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u) {
    if (u == x) continue;
    for (int v : adj[u])
      if (v > u && v != x) out.emplace_back(u, v);
  }
  return out;
}

}  // namespace vpos
