#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "vpos/graph.hpp"

namespace vpos {

// BFS distances from a root, partitioned into layers V_t.
struct DistanceLayers {
  static constexpr int kUnreachable = -1;
  int root = 0;
  std::vector<int> dist;                 // kUnreachable outside root's component
  int ecc = 0;                           // eccentricity within the component
  std::vector<std::vector<int>> layers;  // layers[t] = vertices at distance t
};

DistanceLayers bfs_layers(const Graph& g, int root);

// All-pairs shortest paths, one BFS per vertex. Unreachable pairs get kInf,
// chosen so that kInf + kInf does not overflow.
class DistanceMatrix {
 public:
  static constexpr int32_t kInf = std::numeric_limits<int32_t>::max() / 4;

  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g, int threads = 1);

  int n() const { return n_; }
  int32_t operator()(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
  std::span<const int32_t> row(int u) const {
    return {d_.data() + static_cast<size_t>(u) * n_, static_cast<size_t>(n_)};
  }

 private:
  int n_ = 0;
  std::vector<int32_t> d_;
};

}  // namespace vpos
