#pragma once

#include <cstdint>
#include <vector>

#include "vpos/graph.hpp"

namespace vpos {

// Lexicographically minimal upper-triangle adjacency code over all vertex
// orderings, column-major bit order (the graph6 order). Needs n <= 11 so the
// code fits 64 bits.
uint64_t canonical_code(const Graph& g);

Graph graph_from_code(int n, uint64_t code);

// |Aut(g)|, counted as the number of orderings achieving the canonical code.
uint64_t automorphism_count(const Graph& g);

// Every graph on n unlabeled vertices (isolated vertices allowed), built by
// vertex augmentation with canonical-code rejection; results are cached per
// n. Supported for n <= 8.
const std::vector<Graph>& all_graphs(int n);

// Every connected graph on n unlabeled vertices, exactly once, in canonical
// code order. Counts: 1, 1, 2, 6, 21, 112, 853, 11117 for n = 1..8.
std::vector<Graph> enumerate_small_connected(int n);

}  // namespace vpos
