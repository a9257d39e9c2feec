#include "vpos/distance.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vpos {

DistanceLayers bfs_layers(const Graph& g, int root) {
  if (root < 0 || root >= g.n()) throw std::out_of_range("root out of range");
  DistanceLayers out;
  out.root = root;
  out.dist.assign(g.n(), DistanceLayers::kUnreachable);
  out.dist[root] = 0;
  std::vector<int> queue{root};
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.neighbors(v))
      if (out.dist[w] == DistanceLayers::kUnreachable) {
        out.dist[w] = out.dist[v] + 1;
        queue.push_back(w);
      }
  }
  out.ecc = out.dist[queue.back()];
  out.layers.assign(out.ecc + 1, {});
  for (int v : queue) out.layers[out.dist[v]].push_back(v);
  for (auto& layer : out.layers) std::sort(layer.begin(), layer.end());
  return out;
}

namespace {

void bfs_row(const Graph& g, int src, int32_t* row, std::vector<int>& queue) {
  int n = g.n();
  for (int i = 0; i < n; ++i) row[i] = DistanceMatrix::kInf;
  row[src] = 0;
  queue.clear();
  queue.push_back(src);
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    int32_t d = row[v] + 1;
    for (int w : g.neighbors(v))
      if (row[w] == DistanceMatrix::kInf) {
        row[w] = d;
        queue.push_back(w);
      }
  }
}

}  // namespace

DistanceMatrix::DistanceMatrix(const Graph& g, int threads) {
  n_ = g.n();
  d_.assign(static_cast<size_t>(n_) * n_, kInf);
#ifdef _OPENMP
#pragma omp parallel if (threads != 1) num_threads(threads > 0 ? threads : omp_get_max_threads())
  {
    std::vector<int> queue;
    queue.reserve(n_);
#pragma omp for schedule(dynamic, 16)
    for (int v = 0; v < n_; ++v)
      bfs_row(g, v, d_.data() + static_cast<size_t>(v) * n_, queue);
  }
#else
  (void)threads;
  std::vector<int> queue;
  queue.reserve(n_);
  for (int v = 0; v < n_; ++v)
    bfs_row(g, v, d_.data() + static_cast<size_t>(v) * n_, queue);
#endif
}

}  // namespace vpos
