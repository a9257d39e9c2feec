#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vpos/graph.hpp"

namespace vpos {

struct ParseError : std::runtime_error {
  size_t offset;  // byte offset for graph6, 1-based line for edge lists
  ParseError(const std::string& msg, size_t off)
      : std::runtime_error(msg), offset(off) {}
};

// graph6, bit-exact per the format used by nauty/geng: N(n) header followed
// by the upper triangle of the adjacency matrix in column-major order
// ((0,1),(0,2),(1,2),(0,3),...), packed six bits per byte, most significant
// bit first, each byte offset by 63. An optional ">>graph6<<" prefix is
// accepted.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Plain text: first significant line "n m", then m lines "u v" with
// 0-indexed endpoints. Blank lines and '#' comments are ignored.
Graph parse_edge_list(std::string_view text);

}  // namespace vpos
