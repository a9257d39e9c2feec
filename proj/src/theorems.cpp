#include "vpos/theorems.hpp"

#include <algorithm>
#include <set>

#include "vpos/census.hpp"
#include "vpos/distance.hpp"
#include "vpos/generators.hpp"
#include "vpos/io.hpp"
#include "vpos/metrics.hpp"
#include "vpos/oracle.hpp"
#include "vpos/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vpos {

namespace {

SolveOptions item_solve(const CheckContext& ctx) {
  SolveOptions o = ctx.solve;
  o.threads = 1;  // parallelism lives across corpus items
  return o;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int min_degree(const Graph& g) {
  if (g.n() == 0) return 0;
  int d = g.n();
  for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
  return d;
}

bool is_path_graph(const Graph& g) {
  return g.n() >= 1 && is_connected(g) && g.m() == g.n() - 1 && max_degree(g) <= 2;
}

bool is_cycle_graph(const Graph& g) {
  if (g.n() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_tree(const Graph& g) {
  return g.n() >= 1 && is_connected(g) && g.m() == g.n() - 1;
}

bool has_universal(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == g.n() - 1) return true;
  return false;
}

bool has_isolated(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

bool is_complete(const Graph& g) { return g.m() == g.n() * (g.n() - 1) / 2; }

// Component sizes of the complement, provided each one is independent in g;
// that is exactly the complete multipartite recognizer.
std::vector<std::vector<int>> multipartite_parts(const Graph& g) {
  auto comps = connected_components(complement(g));
  for (const auto& comp : comps)
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = i + 1; j < comp.size(); ++j)
        if (g.has_edge(comp[i], comp[j])) return {};
  return comps;
}

bool is_block_graph(const Graph& g) {
  // every biconnected component must induce a clique
  int n = g.n();
  std::vector<int> num(n, -1), low(n);
  std::vector<Edge> estack;
  int timer = 0;
  bool ok = true;
  auto close_component = [&](const Edge& top) {
    std::vector<Edge> comp;
    for (;;) {
      Edge e = estack.back();
      estack.pop_back();
      comp.push_back(e);
      if (e == top) break;
    }
    std::set<int> verts;
    for (auto [a, b] : comp) {
      verts.insert(a);
      verts.insert(b);
    }
    for (int a : verts)
      for (int b : verts)
        if (a < b && !g.has_edge(a, b)) ok = false;
  };
  auto dfs = [&](auto&& self, int v, int parent) -> void {
    num[v] = low[v] = timer++;
    for (int w : g.neighbors(v)) {
      if (num[w] == -1) {
        estack.push_back({v, w});
        self(self, w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= num[v]) close_component({v, w});
      } else if (w != parent && num[w] < num[v]) {
        estack.push_back({v, w});
        low[v] = std::min(low[v], num[w]);
      }
    }
  };
  for (int s = 0; s < n && ok; ++s)
    if (num[s] == -1) dfs(dfs, s, -1);
  return ok;
}

unsigned long long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long ceil_div(long a, long b) { return (a + b - 1) / b; }


Corpus single(Graph g, std::string name, std::string tag = {},
              std::map<std::string, long> params = {}) {
  Corpus c;
  c.push_back({std::move(g), std::move(name), std::move(tag), std::move(params)});
  return c;
}

void append(Corpus& dst, Corpus src) {
  for (auto& item : src) dst.push_back(std::move(item));
}

// ---- corpus builders ----

Corpus fixed_kneser_corpus() {
  Corpus c;
  for (auto [n, k] : std::vector<std::pair<long, long>>{{5, 2}, {10, 2}, {12, 2}, {14, 2}})
    c.push_back({kneser_graph(static_cast<int>(n), static_cast<int>(k)),
                 "kneser:" + std::to_string(n) + "," + std::to_string(k),
                 "kneser",
                 {{"n", n}, {"k", k}}});
  return c;
}

Corpus g_r_corpus() {
  Corpus c;
  for (long r = 3; r <= 6; ++r) {
    auto gen = paper_g_r(static_cast<int>(r));
    std::map<std::string, long> params{{"r", r}};
    if (r == 3) params["check_gp"] = 1;
    c.push_back({std::move(gen.graph), "paperG_r:" + std::to_string(r), "paperG_r", params});
  }
  return c;
}

Corpus join_corpus(uint64_t seed) {
  Corpus c;
  auto add_pair = [&](const Graph& g1, const Graph& g2, const std::string& name) {
    c.push_back({join(g1, g2),
                 name,
                 "join",
                 {{"n1", g1.n()},
                  {"d1", max_degree(g1)},
                  {"n2", g2.n()},
                  {"d2", max_degree(g2)}}});
  };
  add_pair(complete_graph(1), empty_graph(3), "join(K1,E3)");
  add_pair(complete_graph(2), complete_graph(2), "join(K2,K2)");
  add_pair(empty_graph(2), empty_graph(3), "join(E2,E3)");
  SplitMix64 rng(seed);
  for (int i = 0; i < 40; ++i) {
    int n1 = 1 + static_cast<int>(rng.below(8));
    int n2 = 1 + static_cast<int>(rng.below(8));
    Graph g1 = random_gnp(n1, rng.unit(), rng.next());
    Graph g2 = random_gnp(n2, rng.unit(), rng.next());
    add_pair(g1, g2, "join(random#" + std::to_string(i) + ")");
  }
  return c;
}

Corpus tree_corpus(uint64_t seed) {
  Corpus c;
  SplitMix64 rng(seed);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + static_cast<int>(rng.below(39));  // 2..40
    c.push_back({random_tree(n, rng.next()), "tree#" + std::to_string(i), "tree", {}});
  }
  return c;
}

Corpus block_graph_corpus(uint64_t seed) {
  Corpus c;
  SplitMix64 rng(seed);
  for (int i = 0; i < 100; ++i) {
    int blocks = 1 + static_cast<int>(rng.below(8));
    int max_block = 2 + static_cast<int>(rng.below(4));
    c.push_back({random_block_graph(blocks, max_block, rng.next()),
                 "block#" + std::to_string(i), "blockGraph", {}});
  }
  return c;
}

Corpus multipartite_corpus() {
  Corpus c;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long remaining, long max_part) -> void {
    if (remaining == 0) {
      if (cur.size() >= 2) {
        std::string name = "K_{";
        for (size_t i = 0; i < cur.size(); ++i)
          name += (i ? "," : "") + std::to_string(cur[i]);
        name += "}";
        c.push_back({complete_multipartite(cur), name, "multipartite", {}});
      }
      return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  for (long n = 2; n <= 9; ++n) rec(rec, n, n);
  return c;
}

Corpus radius_corpus(uint64_t seed) {
  Corpus c = census_corpus_connected(7);
  for (int n = 8; n <= 16; ++n) {
    append(c, single(cycle_graph(n), "C" + std::to_string(n)));
    append(c, single(path_graph(n), "P" + std::to_string(n)));
  }
  SplitMix64 rng(seed);
  for (int i = 0; i < 20; ++i)
    append(c, single(random_tree(8 + static_cast<int>(rng.below(9)), rng.next()),
                     "tree#" + std::to_string(i)));
  return c;
}

Corpus alg_a_corpus(uint64_t seed) {
  Corpus c = census_corpus_connected(6);
  SplitMix64 rng(seed);
  int produced = 0;
  while (produced < 30) {
    int n = 7 + static_cast<int>(rng.below(4));
    Graph g = random_gnp(n, 0.25 + 0.45 * rng.unit(), rng.next());
    if (!is_connected(g)) continue;
    append(c, single(std::move(g), "gnp#" + std::to_string(produced)));
    ++produced;
  }
  return c;
}

// ---- assertion helpers ----

using Fails = std::vector<std::string>;

void expect(Fails& fails, bool ok, const std::string& msg) {
  if (!ok) fails.push_back(msg);
}

}  // namespace

Corpus census_corpus_connected(int max_n) {
  Corpus c;
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : enumerate_small_connected(n))
      c.push_back({g, encode_graph6(g), "census", {}});
  return c;
}

Corpus census_corpus_all(int max_n) {
  Corpus c;
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : all_graphs(n))
      c.push_back({g, encode_graph6(g), "census-all", {}});
  return c;
}

namespace {

std::vector<TheoremCheck> make_checks() {
  std::vector<TheoremCheck> checks;

  checks.push_back(
      {"lem-degree-bound",
       "vp- >= minimum degree and vp >= maximum degree",
       "all connected graphs n <= 7",
       [](uint64_t) { return census_corpus_connected(7); },
       [](const CorpusItem& it) { return is_connected(it.graph); },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         VpSummary s = solve_all(it.graph, item_solve(ctx));
         expect(fails, s.vp_minus >= min_degree(it.graph),
                "vp-=" + std::to_string(s.vp_minus) + " below min degree " +
                    std::to_string(min_degree(it.graph)));
         expect(fails, s.vp >= max_degree(it.graph),
                "vp=" + std::to_string(s.vp) + " below max degree " +
                    std::to_string(max_degree(it.graph)));
         return fails;
       }});

  checks.push_back(
      {"lem-eccentricity-lower",
       "p_x * e(x) >= n - 1 for every root (integer arithmetic)",
       "all connected graphs n <= 7",
       [](uint64_t) { return census_corpus_connected(7); },
       [](const CorpusItem& it) { return is_connected(it.graph); },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         VpSummary s = solve_all(g, item_solve(ctx));
         for (int x = 0; x < g.n(); ++x) {
           long ecc = bfs_layers(g, x).ecc;
           expect(fails, static_cast<long>(s.p[x]) * ecc >= g.n() - 1,
                  "p_" + std::to_string(x) + "*e=" +
                      std::to_string(s.p[x] * ecc) + " < n-1");
         }
         return fails;
       }});

  checks.push_back(
      {"lem-eccentricity-upper",
       "p_x <= n - e(x) for every root",
       "all connected graphs n <= 7",
       [](uint64_t) { return census_corpus_connected(7); },
       [](const CorpusItem& it) { return is_connected(it.graph); },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         VpSummary s = solve_all(g, item_solve(ctx));
         for (int x = 0; x < g.n(); ++x)
           expect(fails, s.p[x] <= g.n() - bfs_layers(g, x).ecc,
                  "p_" + std::to_string(x) + "=" + std::to_string(s.p[x]) +
                      " exceeds n - e(x)");
         return fails;
       }});

  checks.push_back(
      {"cor-path-char",
       "vp- = 1 iff the graph is a path; vp = 1 iff n <= 2",
       "all connected graphs 2 <= n <= 7",
       [](uint64_t) { return census_corpus_connected(7); },
       [](const CorpusItem& it) { return is_connected(it.graph) && it.graph.n() >= 2; },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         VpSummary s = solve_all(it.graph, item_solve(ctx));
         expect(fails, (s.vp_minus == 1) == is_path_graph(it.graph),
                "vp-=1 does not characterise paths here");
         expect(fails, (s.vp == 1) == (it.graph.n() <= 2),
                "vp=1 outside K1/K2");
         return fails;
       }});

  checks.push_back(
      {"thm-delta-third",
       "vp- >= ceil((max degree + 1)/3); bipartite: vp- >= ceil(max degree/2)",
       "all connected graphs 2 <= n <= 7 plus the two tightness fixtures",
       [](uint64_t) {
         Corpus c = census_corpus_connected(7);
         append(c, single(delta_third_tight_graph(), "delta-third-tight", "tight",
                          {{"expect_vpminus", 5}}));
         append(c, single(bipartite_half_tight_graph(), "bipartite-half-tight",
                          "tight", {{"expect_vpminus", 4}}));
         return c;
       },
       [](const CorpusItem& it) { return is_connected(it.graph) && it.graph.n() >= 2; },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         VpSummary s = solve_all(g, item_solve(ctx));
         long bound = ceil_div(max_degree(g) + 1, 3);
         expect(fails, s.vp_minus >= bound,
                "vp-=" + std::to_string(s.vp_minus) + " below ceil((D+1)/3)=" +
                    std::to_string(bound));
         if (bipartition(g)) {
           long half = ceil_div(max_degree(g), 2);
           expect(fails, s.vp_minus >= half,
                  "bipartite vp- below ceil(D/2)=" + std::to_string(half));
         }
         if (auto p = it.params.find("expect_vpminus"); p != it.params.end())
           expect(fails, s.vp_minus == p->second,
                  "fixture vp-=" + std::to_string(s.vp_minus) + " expected " +
                      std::to_string(p->second));
         return fails;
       }});

  checks.push_back(
      {"lem-vp-vs-gp",
       "vp >= gp - 1 (gp from the brute-force oracle)",
       "all connected graphs n <= 7",
       [](uint64_t) { return census_corpus_connected(7); },
       [](const CorpusItem& it) {
         return is_connected(it.graph) && it.graph.n() <= OracleBudget{}.max_vertices_gp;
       },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         VpSummary s = solve_all(it.graph, item_solve(ctx));
         int gp = oracle_gp(it.graph);
         expect(fails, s.vp >= gp - 1,
                "vp=" + std::to_string(s.vp) + " < gp-1=" + std::to_string(gp - 1));
         return fails;
       }});

  checks.push_back(
      {"cor-join",
       "vp of a join equals max(n1 + maxdeg2, n2 + maxdeg1)",
       "three fixed joins plus 40 seeded random pairs",
       [](uint64_t seed) { return join_corpus(seed); },
       [](const CorpusItem& it) { return it.tag == "join"; },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         VpSummary s = solve_all(it.graph, item_solve(ctx));
         long expected = std::max(it.params.at("n1") + it.params.at("d2"),
                                  it.params.at("n2") + it.params.at("d1"));
         expect(fails, s.vp == expected,
                "vp=" + std::to_string(s.vp) + " expected " + std::to_string(expected));
         return fails;
       }});

  checks.push_back(
      {"thm-radius3",
       "radius >= 3 implies vp <= n - radius - 1",
       "all connected graphs n <= 7 plus cycles, paths and trees up to n = 16",
       [](uint64_t seed) { return radius_corpus(seed); },
       [](const CorpusItem& it) {
         if (!is_connected(it.graph) || it.graph.n() == 0) return false;
         int rad = it.graph.n();
         for (int v = 0; v < it.graph.n(); ++v)
           rad = std::min(rad, bfs_layers(it.graph, v).ecc);
         return rad >= 3;
       },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         int rad = g.n();
         for (int v = 0; v < g.n(); ++v) rad = std::min(rad, bfs_layers(g, v).ecc);
         VpSummary s = solve_all(g, item_solve(ctx));
         expect(fails, s.vp <= g.n() - rad - 1,
                "vp=" + std::to_string(s.vp) + " exceeds n - rad - 1 = " +
                    std::to_string(g.n() - rad - 1));
         return fails;
       }});

  checks.push_back(
      {"prop-boundary",
       "the boundary of x is an x-position set (and so |boundary| <= p_x)",
       "all connected graphs n <= 7 plus boundary fixtures",
       [](uint64_t) {
         Corpus c = census_corpus_connected(7);
         append(c, single(boundary_tight_graph(), "boundary-tight", "boundary-tight"));
         append(c, single(complete_multipartite({4, 3}), "K_{4,3}",
                          "boundary-bipartite", {{"s", 4}, {"t", 2}}));
         append(c, single(complete_multipartite({3, 4}), "K_{3,4}",
                          "boundary-bipartite", {{"s", 3}, {"t", 3}}));
         return c;
       },
       [](const CorpusItem& it) { return is_connected(it.graph); },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         DistanceMatrix dm(g);
         VpSummary s = solve_all(g, item_solve(ctx));
         for (int x = 0; x < g.n(); ++x) {
           auto b = boundary_position_set(g, x);
           expect(fails, verify_position_set(dm, x, b),
                  "boundary of " + std::to_string(x) + " not a position set");
           // the one-vertex graph scores 0 by convention while its boundary
           // is the vertex itself, so the size comparison starts at n = 2
           if (g.n() >= 2)
             expect(fails, static_cast<int>(b.size()) <= s.p[x],
                    "boundary of " + std::to_string(x) + " larger than p_x");
         }
         if (it.tag == "boundary-tight") {
           auto b = boundary_position_set(g, 7);
           expect(fails, b == std::vector<int>({0, 2, 5}),
                  "fixture boundary set mismatch");
           expect(fails, static_cast<int>(b.size()) == s.p[7],
                  "fixture boundary not maximum");
         }
         if (it.tag == "boundary-bipartite") {
           long sP = it.params.at("s"), t = it.params.at("t");
           int root = static_cast<int>(sP);  // first vertex of the (t+1)-part
           auto b = boundary_position_set(g, root);
           expect(fails, static_cast<long>(b.size()) == t, "boundary size != t");
           expect(fails, s.p[root] == sP, "p_x != s in K_{s,t+1}");
         }
         return fails;
       }});

  checks.push_back(
      {"thm-nordhaus-gaddum",
       "n-1+D-d <= vp(G)+vp(comp G) <= 2n-1, with both equality cases",
       "all graphs 2 <= n <= 6, disconnected included",
       [](uint64_t) { return census_corpus_all(6); },
       [](const CorpusItem& it) { return it.graph.n() >= 2; },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         Graph gbar = complement(g);
         long n = g.n();
         long vp = solve_all(g, item_solve(ctx)).vp;
         long vpbar = solve_all(gbar, item_solve(ctx)).vp;
         long sum = vp + vpbar;
         long dmax = max_degree(g), dmin = min_degree(g);
         expect(fails, sum >= n - 1, "sum below n-1");
         expect(fails, sum >= n - 1 + dmax - dmin, "sum below n-1+D-d");
         expect(fails, sum <= 2 * n - 1, "sum above 2n-1");
         bool extremal = has_isolated(g) || has_universal(g);
         expect(fails, (sum == 2 * n - 1) == extremal,
                "upper equality iff isolated-or-universal failed (sum=" +
                    std::to_string(sum) + ")");
         bool regular_tight = dmax == dmin && vp == dmax && vpbar == n - 1 - dmin;
         expect(fails, (sum == n - 1) == regular_tight,
                "lower equality iff regular-and-degree-tight failed");
         return fails;
       }});

  checks.push_back(
      {"lem-constant-distance",
       "components induced by a position set lie at constant distance from x",
       "all connected graphs n <= 7 (checked on solver witnesses)",
       [](uint64_t) { return census_corpus_connected(7); },
       [](const CorpusItem& it) { return is_connected(it.graph); },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         for (int x = 0; x < g.n(); ++x) {
           PositionResult r = solve_px(g, x, item_solve(ctx));
           DistanceLayers bl = bfs_layers(g, x);
           std::vector<char> in_set(g.n(), 0);
           for (int v : r.witness) in_set[v] = 1;
           std::vector<char> seen(g.n(), 0);
           for (int s : r.witness) {
             if (seen[s]) continue;
             std::vector<int> queue{s};
             seen[s] = 1;
             for (size_t head = 0; head < queue.size(); ++head)
               for (int w : g.neighbors(queue[head]))
                 if (in_set[w] && !seen[w]) {
                   seen[w] = 1;
                   queue.push_back(w);
                 }
             for (int v : queue)
               expect(fails, bl.dist[v] == bl.dist[s],
                      "induced component at mixed distances from " +
                          std::to_string(x));
           }
         }
         return fails;
       }});

  checks.push_back(
      {"thm-bipartite-alpha",
       "bipartite graphs have vp <= independence number",
       "all connected bipartite graphs n <= 7",
       [](uint64_t) { return census_corpus_connected(7); },
       [](const CorpusItem& it) {
         return is_connected(it.graph) && bipartition(it.graph).has_value();
       },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         VpSummary s = solve_all(it.graph, item_solve(ctx));
         int alpha = oracle_alpha(it.graph);
         expect(fails, s.vp <= alpha,
                "vp=" + std::to_string(s.vp) + " above alpha=" + std::to_string(alpha));
         return fails;
       }});

  checks.push_back(
      {"thm-multipartite",
       "complete multipartite: p_x = max(n - n_i, n_i - 1), vp = n - smallest part",
       "every part multiset with n <= 9 and at least two parts",
       [](uint64_t) { return multipartite_corpus(); },
       [](const CorpusItem& it) {
         return is_connected(it.graph) && multipartite_parts(it.graph).size() >= 2;
       },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         auto parts = multipartite_parts(g);
         long n = g.n();
         std::vector<long> part_size(n, 0);
         long smallest = n;
         for (const auto& part : parts) {
           smallest = std::min<long>(smallest, part.size());
           for (int v : part) part_size[v] = static_cast<long>(part.size());
         }
         VpSummary s = solve_all(g, item_solve(ctx));
         for (int x = 0; x < g.n(); ++x) {
           long expected = std::max(n - part_size[x], part_size[x] - 1);
           expect(fails, s.p[x] == expected,
                  "p_" + std::to_string(x) + "=" + std::to_string(s.p[x]) +
                      " expected " + std::to_string(expected));
         }
         expect(fails, s.vp == n - smallest, "vp != n - smallest part");
         return fails;
       }});

  checks.push_back(
      {"thm-block-graph",
       "block graphs: p_x = s(G) - 1 at simplicial x, s(G) otherwise",
       "100 seeded random block graphs",
       [](uint64_t seed) { return block_graph_corpus(seed); },
       [](const CorpusItem& it) {
         return is_connected(it.graph) && is_block_graph(it.graph);
       },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         int simplicial_count = 0;
         std::vector<char> simp(g.n(), 0);
         for (int v = 0; v < g.n(); ++v)
           if (is_simplicial(g, v)) {
             simp[v] = 1;
             ++simplicial_count;
           }
         VpSummary s = solve_all(g, item_solve(ctx));
         for (int x = 0; x < g.n(); ++x) {
           int expected = simplicial_count - (simp[x] ? 1 : 0);
           expect(fails, s.p[x] == expected,
                  "p_" + std::to_string(x) + "=" + std::to_string(s.p[x]) +
                      " expected " + std::to_string(expected));
         }
         return fails;
       }});

  checks.push_back(
      {"cor-trees",
       "trees: p_x = leaves - 1 at a leaf, leaves otherwise",
       "100 seeded uniform random trees, n <= 40",
       [](uint64_t seed) { return tree_corpus(seed); },
       [](const CorpusItem& it) { return is_tree(it.graph); },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         int leaves = 0;
         for (int v = 0; v < g.n(); ++v)
           if (g.degree(v) == 1) ++leaves;
         VpSummary s = solve_all(g, item_solve(ctx));
         for (int x = 0; x < g.n(); ++x) {
           int expected = leaves - (g.degree(x) == 1 ? 1 : 0);
           expect(fails, s.p[x] == expected,
                  "p_" + std::to_string(x) + "=" + std::to_string(s.p[x]) +
                      " expected " + std::to_string(expected));
         }
         return fails;
       }});

  checks.push_back(
      {"thm-girth",
       "min degree >= 2: p_u <= n - |ball(u, floor((g-1)/2) - 1)|",
       "all connected graphs n <= 7 with min degree >= 2, plus the Petersen graph",
       [](uint64_t) {
         Corpus c = census_corpus_connected(7);
         append(c, single(kneser_graph(5, 2), "petersen", "petersen-tight"));
         return c;
       },
       [](const CorpusItem& it) {
         if (!is_connected(it.graph) || min_degree(it.graph) < 2) return false;
         return metrics(it.graph).girth.has_value();
       },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         int girth = *metrics(g).girth;
         int r = (girth - 1) / 2;
         VpSummary s = solve_all(g, item_solve(ctx));
         for (int u = 0; u < g.n(); ++u) {
           DistanceLayers bl = bfs_layers(g, u);
           int inner = 0;
           for (int v = 0; v < g.n(); ++v)
             if (bl.dist[v] != DistanceLayers::kUnreachable && bl.dist[v] <= r - 1)
               ++inner;
           expect(fails, s.p[u] <= g.n() - inner,
                  "p_" + std::to_string(u) + " exceeds n - N");
           if (it.tag == "petersen-tight")
             expect(fails, s.p[u] == g.n() - inner, "Petersen bound not tight");
         }
         return fails;
       }});

  checks.push_back(
      {"thm-kneser",
       "K(n,k) has vp = C(n-k,k) once the degree bound dominates the "
       "distance-two count (guard: n >= 3k and C(n,k)-C(n-2k+1,k) < C(n-k,k))",
       "Kneser fixtures (5,2), (10,2), (12,2), (14,2); guarded instances skip",
       [](uint64_t) { return fixed_kneser_corpus(); },
       [](const CorpusItem& it) {
         if (it.tag != "kneser") return false;
         long n = it.params.at("n"), k = it.params.at("k");
         if (n < 3 * k) return false;
         return binom(n, k) - binom(n - 2 * k + 1, k) < binom(n - k, k);
       },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         long n = it.params.at("n"), k = it.params.at("k");
         VpSummary s = solve_all(it.graph, item_solve(ctx));
         long expected = static_cast<long>(binom(n - k, k));
         expect(fails, s.vp == expected,
                "vp=" + std::to_string(s.vp) + " expected C(n-k,k)=" +
                    std::to_string(expected));
         return fails;
       }});

  checks.push_back(
      {"cor-universal",
       "vp = n-1 iff a universal vertex exists; vp- = n-1 iff complete",
       "all connected graphs n <= 8",
       [](uint64_t) { return census_corpus_connected(8); },
       [](const CorpusItem& it) { return is_connected(it.graph); },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         VpSummary s = solve_all(g, item_solve(ctx));
         expect(fails, (s.vp == g.n() - 1) == has_universal(g),
                "vp=n-1 vs universal-vertex mismatch");
         expect(fails, (s.vp_minus == g.n() - 1) == is_complete(g),
                "vp-=n-1 vs completeness mismatch");
         return fails;
       }});

  checks.push_back(
      {"cor-cycles",
       "vp- = vp = 2 iff a cycle; vp = 2 iff a cycle or a path on >= 3 vertices",
       "all connected graphs n <= 8",
       [](uint64_t) { return census_corpus_connected(8); },
       [](const CorpusItem& it) { return is_connected(it.graph); },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         VpSummary s = solve_all(g, item_solve(ctx));
         expect(fails, (s.vp_minus == 2 && s.vp == 2) == is_cycle_graph(g),
                "vp- = vp = 2 vs cycle mismatch");
         bool path3 = is_path_graph(g) && g.n() >= 3;
         expect(fails, (s.vp == 2) == (is_cycle_graph(g) || path3),
                "vp = 2 vs cycle-or-path mismatch");
         return fails;
       }});

  checks.push_back(
      {"lem-n-minus-2",
       "p_u = n-2 iff deg(u) = n-2, or e(u) = 2 and one neighbour v of u is "
       "the sole N(u)-contact of every distance-2 vertex; then v is a "
       "dominating cutvertex partner and V-{u,v} is the unique maximum set",
       "all connected graphs n <= 8",
       [](uint64_t) { return census_corpus_connected(8); },
       [](const CorpusItem& it) { return is_connected(it.graph) && it.graph.n() >= 2; },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         int n = g.n();
         DistanceMatrix dm(g);
         GraphMetrics met = metrics(g);
         for (int u = 0; u < n; ++u) {
           PositionResult r = solve_px(g, u, item_solve(ctx));
           bool numeric = r.value == n - 2;
           bool deg_case = g.degree(u) == n - 2;
           // the proof's structure: eccentricity two and a shared unique
           // contact vertex v for the whole second neighbourhood
           int shared = -2;  // -2 unset, -1 broken
           if (g.degree(u) <= n - 3) {
             for (int y = 0; y < n && shared != -1; ++y) {
               if (dm(u, y) != 2) continue;
               int contact = -1;
               int contacts = 0;
               for (int w : g.neighbors(y))
                 if (dm(u, w) == 1) {
                   ++contacts;
                   contact = w;
                 }
               if (contacts != 1) shared = -1;
               else if (shared == -2) shared = contact;
               else if (shared != contact) shared = -1;
             }
             if (bfs_layers(g, u).ecc != 2) shared = -1;
           } else {
             shared = -1;
           }
           bool structural = deg_case || shared >= 0;
           expect(fails, numeric == structural,
                  "p_u = n-2 characterisation mismatch at u=" + std::to_string(u));
           if (numeric && !deg_case && shared >= 0) {
             int v = shared;
             expect(fails,
                    std::find(met.cut_vertices.begin(), met.cut_vertices.end(), v) !=
                        met.cut_vertices.end(),
                    "partner vertex is not a cutvertex");
             bool dominates = true;
             for (int w = 0; w < n; ++w)
               if (w != u && w != v && !g.has_edge(u, w) && !g.has_edge(v, w))
                 dominates = false;
             expect(fails, dominates, "{u,v} does not dominate");
             std::vector<int> expected_set;
             for (int w = 0; w < n; ++w)
               if (w != u && w != v) expected_set.push_back(w);
             expect(fails, r.witness == expected_set,
                    "solver witness is not V - {u,v}");
             for (int w = 0; w < n; ++w) {
               if (w == u) continue;
               std::vector<int> candidate;
               for (int z = 0; z < n; ++z)
                 if (z != u && z != w) candidate.push_back(z);
               bool good = verify_position_set(dm, u, candidate);
               expect(fails, good == (w == v),
                      "maximum set uniqueness fails at w=" + std::to_string(w));
             }
           }
         }
         return fails;
       }});

  checks.push_back(
      {"thm-k222",
       "vp- = vp = n-2 iff the graph is an even clique minus a perfect matching",
       "all connected graphs 4 <= n <= 8",
       [](uint64_t) { return census_corpus_connected(8); },
       [](const CorpusItem& it) { return is_connected(it.graph) && it.graph.n() >= 4; },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         VpSummary s = solve_all(g, item_solve(ctx));
         bool cocktail = g.n() % 2 == 0;
         for (int v = 0; v < g.n() && cocktail; ++v)
           if (g.degree(v) != g.n() - 2) cocktail = false;
         expect(fails, (s.vp == g.n() - 2 && s.vp_minus == g.n() - 2) == cocktail,
                "vp- = vp = n-2 vs clique-minus-perfect-matching mismatch");
         return fails;
       }});

  checks.push_back(
      {"thm-n2-n1",
       "vp- = n-2 and vp = n-1 iff a clique minus a non-empty non-perfect "
       "matching, or the join of K1 with at least two disjoint cliques",
       "all connected graphs 4 <= n <= 8",
       [](uint64_t) { return census_corpus_connected(8); },
       [](const CorpusItem& it) { return is_connected(it.graph) && it.graph.n() >= 4; },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         int n = g.n();
         VpSummary s = solve_all(g, item_solve(ctx));
         bool numeric = s.vp_minus == n - 2 && s.vp == n - 1;

         bool matching_case = min_degree(g) >= n - 2;
         bool some_low = false, some_high = false;
         for (int v = 0; v < n; ++v) {
           if (g.degree(v) == n - 2) some_low = true;
           if (g.degree(v) == n - 1) some_high = true;
         }
         matching_case = matching_case && some_low && some_high;

         bool join_case = false;
         for (int v = 0; v < n && !join_case; ++v) {
           if (g.degree(v) != n - 1) continue;
           // components of g - v must all be cliques, at least two of them
           std::vector<int> rest;
           for (int w = 0; w < n; ++w)
             if (w != v) rest.push_back(w);
           std::vector<char> seen(n, 0);
           seen[v] = 1;
           int comps = 0;
           bool cliques = true;
           for (int sv : rest) {
             if (seen[sv]) continue;
             ++comps;
             std::vector<int> queue{sv};
             seen[sv] = 1;
             for (size_t head = 0; head < queue.size(); ++head)
               for (int w : g.neighbors(queue[head]))
                 if (w != v && !seen[w]) {
                   seen[w] = 1;
                   queue.push_back(w);
                 }
             for (size_t i = 0; i < queue.size() && cliques; ++i)
               for (size_t j = i + 1; j < queue.size(); ++j)
                 if (!g.has_edge(queue[i], queue[j])) {
                   cliques = false;
                   break;
                 }
           }
           join_case = cliques && comps >= 2;
         }
         expect(fails, numeric == (matching_case || join_case),
                "vp- = n-2, vp = n-1 characterisation mismatch");
         return fails;
       }});

  checks.push_back(
      {"lem-G-r",
       "the split-level family: vp- = r at the apex, vp = 6r-4 at the mid "
       "path vertex; gp = 2r (oracle, r = 3 only)",
       "paperG_r for r = 3..6",
       [](uint64_t) { return g_r_corpus(); },
       [](const CorpusItem& it) { return it.tag == "paperG_r"; },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         long r = it.params.at("r");
         const Graph& g = it.graph;
         VpSummary s = solve_all(g, item_solve(ctx));
         expect(fails, s.vp_minus == r, "vp- != r");
         expect(fails, s.vp == 6 * r - 4, "vp != 6r-4");
         expect(fails, s.p[0] == r, "apex does not attain vp-");
         int u41 = static_cast<int>(1 + 3 * r);  // vertex (4,1)
         expect(fails, s.p[u41] == 6 * r - 4, "mid path vertex does not attain vp");
         if (it.params.count("check_gp")) {
           OracleBudget budget;
           budget.max_vertices_gp = g.n();
           expect(fails, oracle_gp(g, budget) == 2 * r, "gp != 2r");
         }
         return fails;
       }});

  checks.push_back(
      {"lem-cutvertex-free",
       "some maximum x-position set avoids cutvertices (exhaustive subsets)",
       "all connected graphs 2 <= n <= 8",
       [](uint64_t) { return census_corpus_connected(8); },
       [](const CorpusItem& it) {
         return is_connected(it.graph) && it.graph.n() >= 2 && it.graph.n() <= 8;
       },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         int n = g.n();
         DistanceMatrix dm(g);
         VpSummary s = solve_all(g, item_solve(ctx));
         std::vector<char> is_cut(n, 0);
         for (int v : metrics(g).cut_vertices) is_cut[v] = 1;
         for (int x = 0; x < n; ++x) {
           int others[8], k = 0;
           for (int v = 0; v < n; ++v)
             if (v != x) others[k++] = v;
           int best = 0;
           bool best_cutfree = false;
           for (uint32_t mask = 1; mask < (1u << k); ++mask) {
             int members[8], mcount = 0;
             for (int i = 0; i < k; ++i)
               if (mask & (1u << i)) members[mcount++] = others[i];
             bool ok = true;
             for (int i = 0; i < mcount && ok; ++i)
               for (int j = i + 1; j < mcount; ++j) {
                 int a = members[i], b = members[j];
                 if (dm(x, a) + dm(a, b) == dm(x, b) ||
                     dm(x, b) + dm(b, a) == dm(x, a)) {
                   ok = false;
                   break;
                 }
               }
             if (!ok) continue;
             bool cutfree = true;
             for (int i = 0; i < mcount; ++i)
               if (is_cut[members[i]]) cutfree = false;
             if (mcount > best) {
               best = mcount;
               best_cutfree = cutfree;
             } else if (mcount == best && cutfree) {
               best_cutfree = true;
             }
           }
           expect(fails, best == s.p[x],
                  "exhaustive maximum disagrees with solver at x=" + std::to_string(x));
           expect(fails, best_cutfree,
                  "every maximum set at x=" + std::to_string(x) + " uses a cutvertex");
         }
         return fails;
       }});

  checks.push_back(
      {"lem-equiv-reduced",
       "removing same-layer edges preserves p_x",
       "all connected graphs n <= 7",
       [](uint64_t) { return census_corpus_connected(7); },
       [](const CorpusItem& it) { return is_connected(it.graph); },
       [](const CorpusItem& it, const CheckContext& ctx) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         for (int x = 0; x < g.n(); ++x) {
           int full = solve_px(g, x, item_solve(ctx)).value;
           int reduced = solve_px(reduced_graph(g, x), x, item_solve(ctx)).value;
           expect(fails, full == reduced,
                  "p_x changed under reduction at x=" + std::to_string(x));
         }
         return fails;
       }});

  checks.push_back(
      {"alg-a-agreement",
       "the distance-identity order matches the literal queue-based "
       "construction of the comparability edges",
       "all connected graphs n <= 6 plus 30 seeded connected gnp graphs n <= 10",
       [](uint64_t seed) { return alg_a_corpus(seed); },
       [](const CorpusItem& it) { return is_connected(it.graph) && it.graph.n() >= 1; },
       [](const CorpusItem& it, const CheckContext&) -> Fails {
         Fails fails;
         const Graph& g = it.graph;
         for (int x = 0; x < g.n(); ++x) {
           std::vector<Edge> ref = comparability_edges_reference(g, x);
           GeodesicOrder order = geodesic_order(g, x);
           std::vector<Edge> pairs;
           for (int u : order.component) {
             if (u == x) continue;
             order.succ[u].for_each([&](int v) {
               pairs.emplace_back(std::min(u, v), std::max(u, v));
             });
           }
           std::sort(pairs.begin(), pairs.end());
           std::sort(ref.begin(), ref.end());
           expect(fails, pairs == ref,
                  "comparability edges disagree at x=" + std::to_string(x));
         }
         return fails;
       }});

  return checks;
}

}  // namespace

const std::vector<TheoremCheck>& builtin_checks() {
  static const std::vector<TheoremCheck> checks = make_checks();
  return checks;
}

const TheoremCheck& find_check(std::string_view id) {
  for (const TheoremCheck& c : builtin_checks())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown check id: " + std::string(id));
}

TheoremReport run_check(const TheoremCheck& check, const Corpus& corpus,
                        const std::string& corpus_desc, const HarnessOptions& opt) {
  TheoremReport report;
  report.id = check.id;
  report.corpus = corpus_desc;

  CheckContext ctx;
  ctx.solve.self_check = opt.self_check;
  ctx.solve.threads = 1;

  int count = static_cast<int>(corpus.size());
  std::vector<char> applicable(count, 0);
  std::vector<std::vector<std::string>> failures(count);

  int threads = opt.threads;
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
#endif
  for (int i = 0; i < count; ++i) {
    try {
      if (!check.applicable(corpus[i])) continue;
      applicable[i] = 1;
      failures[i] = check.check(corpus[i], ctx);
    } catch (const std::exception& e) {
      applicable[i] = 1;
      failures[i].push_back(std::string("solver failure: ") + e.what());
    }
  }

  for (int i = 0; i < count; ++i) {
    if (!applicable[i]) {
      ++report.skipped;
      continue;
    }
    ++report.tested;
    if (failures[i].empty()) {
      ++report.passed;
    } else {
      std::string detail = corpus[i].name + ": " + failures[i].front();
      if (failures[i].size() > 1)
        detail += " (+" + std::to_string(failures[i].size() - 1) + " more)";
      report.counterexamples.push_back({encode_graph6(corpus[i].graph), detail});
    }
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return a.graph6 != b.graph6 ? a.graph6 < b.graph6 : a.detail < b.detail;
            });
  return report;
}

}  // namespace vpos
