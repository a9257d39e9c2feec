#pragma once

#include <optional>
#include <vector>

#include "vpos/graph.hpp"

namespace vpos {

struct ComponentInfo {
  std::vector<int> vertices;  // sorted
  int diameter = 0;
  int radius = 0;
};

struct GraphMetrics {
  bool connected = true;
  std::optional<int> diameter;  // set iff connected and n > 0
  std::optional<int> radius;
  std::vector<ComponentInfo> components;
  std::optional<int> girth;  // nullopt means acyclic (infinite girth)
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> simplicial;               // sorted
  std::vector<int> cut_vertices;             // sorted
  std::vector<std::vector<int>> boundary;    // boundary[x], sorted
};

GraphMetrics metrics(const Graph& g);

// Vertices w of x's component (plus, vacuously, every vertex of other
// components) whose neighbours are all at distance <= d(x,w) from x.
std::vector<int> boundary_of(const Graph& g, int x);

bool is_simplicial(const Graph& g, int v);

// Colour classes of a proper 2-colouring, or nullopt if an odd cycle exists.
std::optional<std::vector<char>> bipartition(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace vpos
