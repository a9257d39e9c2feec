#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vpos/census.hpp"
#include "vpos/generators.hpp"
#include "vpos/metrics.hpp"
#include "vpos/oracle.hpp"
#include "vpos/rng.hpp"
#include "vpos/solver.hpp"

using namespace vpos;

namespace {

// Unpruned reference: every vertex subset (the root included, which only
// survives the predicate when it is isolated). One-vertex graphs score 0 by
// convention.
int plain_subset_px(const Graph& g, int x) {
  if (g.n() == 1) return 0;
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < g.n(); ++v)
      if (mask & (1u << v)) s.push_back(v);
    if (verify_position_set(g, x, s)) best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

}  // namespace

TEST_CASE("oracle_px fixtures") {
  CHECK(oracle_px(cycle_graph(6), 0).value == 2);

  // star leaf: the other three leaves
  Graph star = join(complete_graph(1), empty_graph(4));
  PositionResult leaf = oracle_px(star, 1);
  CHECK(leaf.value == 3);
  CHECK(leaf.witness == std::vector<int>({2, 3, 4}));

  // the bundled 13-vertex example needs one more vertex of budget
  OracleBudget fig_budget;
  fig_budget.max_vertices_px = 13;
  auto fig = paper_fig1();
  CHECK(oracle_px(fig.graph, 5, fig_budget).value == 11);  // b1
  CHECK(oracle_px(fig.graph, 0, fig_budget).value == 4);   // x

  CHECK(oracle_px(complete_graph(1), 0).value == 0);
  CHECK(oracle_px(empty_graph(4), 2).value == 4);
}

TEST_CASE("oracle budget is enforced") {
  OracleBudget tight;
  tight.max_vertices_px = 5;
  CHECK_THROWS_AS(oracle_px(cycle_graph(8), 0, tight), BudgetExceeded);
  tight.max_vertices_gp = 4;
  CHECK_THROWS_AS(oracle_gp(cycle_graph(8), tight), BudgetExceeded);
  // disconnected input: only the root's component counts against the budget
  Graph two_triangles = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  OracleBudget small;
  small.max_vertices_px = 3;
  CHECK(oracle_px(two_triangles, 0, small).value == 5);
}

TEST_CASE("oracle_px with pruning equals plain subset enumeration on n <= 7") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_small_connected(n))
      for (int x = 0; x < g.n(); ++x)
        CHECK(oracle_px(g, x).value == plain_subset_px(g, x));
  SplitMix64 rng(73);
  for (int i = 0; i < 30; ++i) {
    Graph g = random_gnp(7, rng.unit(), rng.next());
    for (int x = 0; x < 7; ++x)
      CHECK(oracle_px(g, x).value == plain_subset_px(g, x));
  }
}

TEST_CASE("oracle_gp fixtures") {
  for (int n = 2; n <= 8; ++n) CHECK(oracle_gp(complete_graph(n)) == n);
  for (int n = 2; n <= 9; ++n) CHECK(oracle_gp(path_graph(n)) == 2);
  CHECK(oracle_gp(cycle_graph(7)) == 3);

  auto gr = paper_g_r(3);
  OracleBudget budget;
  budget.max_vertices_gp = gr.graph.n();
  CHECK(oracle_gp(gr.graph, budget) == 6);
}

TEST_CASE("oracle_alpha fixtures") {
  CHECK(oracle_alpha(cycle_graph(5)) == 2);
  CHECK(oracle_alpha(complete_multipartite({5, 3})) == 5);
  CHECK(oracle_alpha(kneser_graph(5, 2)) == 4);
  CHECK(oracle_alpha(empty_graph(7)) == 7);
  CHECK(oracle_alpha(complete_graph(7)) == 1);
  // bipartite graphs bypass the size budget entirely
  Graph big_even_cycle = cycle_graph(50);
  CHECK(oracle_alpha(big_even_cycle) == 25);
}

TEST_CASE("vp >= gp - 1 on small graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_small_connected(n))
      CHECK(solve_all(g).vp >= oracle_gp(g) - 1);
}

TEST_CASE("solver equals oracle on censuses and random graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_small_connected(n))
      for (int x = 0; x < g.n(); ++x)
        CHECK(solve_px(g, x).value == oracle_px(g, x).value);

  SplitMix64 rng(79);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + static_cast<int>(rng.below(8));
    Graph g = random_gnp(n, rng.unit(), rng.next());  // disconnected welcome
    for (int x = 0; x < n; ++x)
      CHECK(solve_px(g, x).value == oracle_px(g, x).value);
  }
}
