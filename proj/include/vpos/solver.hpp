#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vpos/bitset.hpp"
#include "vpos/distance.hpp"
#include "vpos/graph.hpp"

namespace vpos {

// The strict order u < v iff u lies on some x,v-geodesic, taken over the
// vertices of x's component other than x itself. Built from the distance
// identity d(x,u) + d(u,v) = d(x,v); the relation is transitively closed by
// the triangle structure of shortest paths, so successor bitsets are the
// whole story.
struct GeodesicOrder {
  int root = 0;
  std::vector<int> component;  // sorted, includes root
  std::vector<Bitset> succ;    // succ[u] = { v : u < v }; empty rows off-component

  bool less(int u, int v) const {
    return succ[u].size() > 0 && succ[u].test(v);
  }
};

GeodesicOrder geodesic_order(const Graph& g, int x);
GeodesicOrder geodesic_order(const Graph& g, int x, const DistanceMatrix& dm);

// Maximum antichain of the order: Hopcroft-Karp matching on the split
// bipartite graph (u_L -> v_R iff u < v), then vertices with neither copy in
// the König cover. Size is always |ground set| - |matching|.
std::vector<int> max_antichain(const GeodesicOrder& order);

enum class SolveMethod { kPolynomial, kOracle };

struct CrossCheck {
  int oracle_value = 0;
  bool match = false;
};

struct PositionResult {
  int root = 0;
  std::vector<int> witness;  // sorted
  int value = 0;
  SolveMethod method = SolveMethod::kPolynomial;
  std::optional<CrossCheck> cross_check;
};

struct VpSummary {
  std::vector<int> p;  // p[x] for every vertex
  int vp = 0;
  int vp_minus = 0;
  std::vector<int> argmax;  // sorted vertices attaining vp
  std::vector<int> argmin;
};

struct SolveOptions {
  int threads = 1;          // for solve_all: 1 = serial, 0 = all cores
  bool self_check = false;  // assert structural invariants on every solve
};

// p_x with a witness set. Disconnected inputs follow the component rule:
// everything outside x's component joins the witness; an isolated root in a
// larger graph contributes itself as well. A one-vertex graph yields 0.
PositionResult solve_px(const Graph& g, int x, const SolveOptions& opt = {});
PositionResult solve_px(const Graph& g, int x, const DistanceMatrix& dm,
                        const SolveOptions& opt = {});

VpSummary solve_all(const Graph& g, const SolveOptions& opt = {});

// Pure predicate from the definition: no member of s other than y sits on
// any x,y-geodesic. Members outside x's component never violate.
bool verify_position_set(const Graph& g, int x, std::span<const int> s);
bool verify_position_set(const DistanceMatrix& dm, int x, std::span<const int> s);

// The boundary of x, guaranteed to be an x-position set.
std::vector<int> boundary_position_set(const Graph& g, int x);

// g with every edge between equidistant-from-x vertices removed; p_x is
// invariant under this reduction.
Graph reduced_graph(const Graph& g, int x);

// Literal queue-based construction of the comparability edge set over
// V \ {x} (the serial reference kept for testing). Connected input only.
std::vector<Edge> comparability_edges_reference(const Graph& g, int x);

}  // namespace vpos
