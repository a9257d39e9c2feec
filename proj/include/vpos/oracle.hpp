#pragma once

#include <cstdint>
#include <stdexcept>

#include "vpos/graph.hpp"
#include "vpos/solver.hpp"

namespace vpos {

// The oracle refuses oversized inputs instead of running unbounded.
struct OracleBudget {
  int max_vertices_px = 12;     // component size limit for oracle_px
  int max_vertices_gp = 10;     // graph size limit for oracle_gp
  int max_vertices_alpha = 26;  // non-bipartite limit for oracle_alpha
  uint64_t max_nodes = 1ULL << 26;  // search-node cap
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact p_x by backtracking over component vertices in descending-degree
// order, pruning with the n - e(x) cap; feasibility is the distance
// identity, checked incrementally against the current set.
PositionResult oracle_px(const Graph& g, int x, const OracleBudget& budget = {});

// Exact general position number.
int oracle_gp(const Graph& g, const OracleBudget& budget = {});

// Exact independence number; bipartite graphs go through matching and are
// exempt from the size budget.
int oracle_alpha(const Graph& g, const OracleBudget& budget = {});

}  // namespace vpos
