#pragma once

#include <cstdint>
#include <vector>

namespace vpos {

// Compressed adjacency, left vertex -> right vertices.
struct Csr {
  std::vector<int32_t> offsets;  // size n_left + 1
  std::vector<int32_t> targets;

  int degree(int u) const { return offsets[u + 1] - offsets[u]; }
};

struct MatchingResult {
  int size = 0;
  std::vector<int32_t> match_left;   // -1 if unmatched
  std::vector<int32_t> match_right;  // -1 if unmatched
};

// Deterministic Hopcroft-Karp: vertices and edges are always scanned in
// ascending order, so identical inputs give identical matchings.
MatchingResult hopcroft_karp(int n_left, int n_right, const Csr& adj);

struct VertexCover {
  std::vector<char> left;   // 1 if the left copy is in the minimum cover
  std::vector<char> right;
};

// König construction from a maximum matching: alternating reachability from
// unmatched left vertices. |cover| == matching.size.
VertexCover konig_cover(int n_left, int n_right, const Csr& adj,
                        const MatchingResult& matching);

}  // namespace vpos
