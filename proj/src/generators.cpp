#include "vpos/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "vpos/fig1_data.hpp"
#include "vpos/io.hpp"
#include "vpos/rng.hpp"

namespace vpos {

namespace {

[[noreturn]] void bad_spec(const std::string& msg) {
  throw std::invalid_argument("family spec: " + msg);
}

const std::map<std::string, FamilySpec::Family, std::less<>>& family_names() {
  using F = FamilySpec::Family;
  static const std::map<std::string, F, std::less<>> names = {
      {"path", F::kPath},
      {"cycle", F::kCycle},
      {"complete", F::kComplete},
      {"completeMultipartite", F::kCompleteMultipartite},
      {"star", F::kStar},
      {"tree-random", F::kTreeRandom},
      {"tree", F::kTreeRandom},
      {"blockGraph-random", F::kBlockGraphRandom},
      {"blockgraph", F::kBlockGraphRandom},
      {"kneser", F::kKneser},
      {"petersen", F::kPetersen},
      {"paperG_r", F::kPaperGr},
      {"paperFig1", F::kPaperFig1},
      {"gnp-random", F::kGnpRandom},
      {"gnp", F::kGnpRandom},
  };
  return names;
}

std::string canonical_name(FamilySpec::Family f) {
  using F = FamilySpec::Family;
  switch (f) {
    case F::kPath: return "path";
    case F::kCycle: return "cycle";
    case F::kComplete: return "complete";
    case F::kCompleteMultipartite: return "completeMultipartite";
    case F::kStar: return "star";
    case F::kTreeRandom: return "tree-random";
    case F::kBlockGraphRandom: return "blockGraph-random";
    case F::kKneser: return "kneser";
    case F::kPetersen: return "petersen";
    case F::kPaperGr: return "paperG_r";
    case F::kPaperFig1: return "paperFig1";
    case F::kGnpRandom: return "gnp-random";
  }
  return "?";
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  FamilySpec spec;
  std::string_view name = text;
  std::string_view args;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    name = text.substr(0, colon);
    args = text.substr(colon + 1);
  }
  auto it = family_names().find(name);
  if (it == family_names().end())
    bad_spec("unknown family '" + std::string(name) + "'");
  spec.family = it->second;

  while (!args.empty()) {
    auto comma = args.find(',');
    std::string_view tok = args.substr(0, comma);
    args = comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);
    if (tok.empty()) bad_spec("empty parameter");
    if (tok.substr(0, 5) == "seed=") {
      uint64_t s = 0;
      auto [p, ec] = std::from_chars(tok.data() + 5, tok.data() + tok.size(), s);
      if (ec != std::errc() || p != tok.data() + tok.size()) bad_spec("bad seed");
      spec.seed = s;
    } else if (tok.find('.') != std::string_view::npos) {
      double d = 0;
      // from_chars for doubles is fine on gcc 11
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
      if (ec != std::errc() || p != tok.data() + tok.size()) bad_spec("bad number");
      spec.p = d;
    } else {
      long v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size()) bad_spec("bad integer");
      spec.sizes.push_back(v);
    }
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = canonical_name(family);
  char sep = ':';
  for (long v : sizes) {
    out += sep + std::to_string(v);
    sep = ',';
  }
  if (family == Family::kGnpRandom) {
    out += sep + std::to_string(p);
    sep = ',';
  }
  if (family == Family::kGnpRandom || family == Family::kTreeRandom ||
      family == Family::kBlockGraphRandom)
    out += std::string(1, sep) + "seed=" + std::to_string(seed);
  return out;
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

Graph complete_multipartite(const std::vector<long>& parts) {
  if (parts.empty()) bad_spec("completeMultipartite needs part sizes");
  for (long s : parts)
    if (s < 1) bad_spec("part sizes must be positive");
  std::vector<int> part_of;
  for (size_t i = 0; i < parts.size(); ++i)
    part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

namespace {

void k_subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(k);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v + (k - depth) <= n + 1; ++v) {
      cur[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 1, 0);
}

}  // namespace

Graph kneser_graph(int n, int k) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("kneser needs n >= 2k >= 2");
  std::vector<std::vector<int>> subsets;
  k_subsets(n, k, subsets);
  int count = static_cast<int>(subsets.size());
  std::vector<uint64_t> masks(count, 0);
  for (int i = 0; i < count; ++i)
    for (int v : subsets[i]) masks[i] |= 1ULL << v;
  std::vector<Edge> edges;
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (!(masks[i] & masks[j])) edges.emplace_back(i, j);
  return Graph::from_edges(count, edges);
}

Graph random_tree(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs n >= 1");
  if (n == 1) return empty_graph(1);
  if (n == 2) return path_graph(2);
  // uniform Prüfer sequence, linear decode; vertex n-1 is never removed as a
  // leaf, so it takes the final edge
  SplitMix64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (int& v : pruefer) v = static_cast<int>(rng.below(n));
  std::vector<int> degree(n, 1);
  for (int v : pruefer) ++degree[v];
  std::vector<Edge> edges;
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : pruefer) {
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph::from_edges(n, edges);
}

Graph random_block_graph(int blocks, int max_block, uint64_t seed) {
  if (blocks < 1 || max_block < 2)
    throw std::invalid_argument("block graph needs blocks >= 1, max block >= 2");
  SplitMix64 rng(seed);
  auto block_size = [&]() { return 2 + static_cast<int>(rng.below(max_block - 1)); };
  std::vector<Edge> edges;
  int n = block_size();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  for (int b = 1; b < blocks; ++b) {
    int attach = static_cast<int>(rng.below(n));
    int size = block_size();
    std::vector<int> members{attach};
    for (int i = 1; i < size; ++i) members.push_back(n++);
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j)
        edges.emplace_back(std::min(members[i], members[j]),
                           std::max(members[i], members[j]));
  }
  return Graph::from_edges(n, edges);
}

Graph random_gnp(int n, double p, uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("bad gnp parameters");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

GeneratedGraph paper_g_r(int r) {
  if (r < 2) throw std::invalid_argument("paperG_r needs r >= 2");
  // levels 1..7 of r vertices each over an apex; level cliques plus complete
  // bipartite joins between consecutive levels, then vertices (3,1), (4,1),
  // (5,1) are stripped down to the path (2,1)-(3,1)-(4,1)-(5,1)-(6,1)
  auto id = [r](int level, int j) { return 1 + (level - 1) * r + (j - 1); };
  int n = 7 * r + 1;
  int u31 = id(3, 1), u41 = id(4, 1), u51 = id(5, 1);
  auto allowed = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    for (int special : {u31, u41, u51})
      if (a == special || b == special) {
        bool on_path = (a == id(2, 1) && b == u31) || (a == u31 && b == u41) ||
                       (a == u41 && b == u51) || (a == u51 && b == id(6, 1));
        return on_path;
      }
    return true;
  };
  std::vector<Edge> edges;
  auto add = [&](int a, int b) {
    if (allowed(a, b)) edges.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (int j = 1; j <= r; ++j) add(0, id(1, j));
  for (int level = 1; level <= 7; ++level)
    for (int j = 1; j <= r; ++j)
      for (int j2 = j + 1; j2 <= r; ++j2) add(id(level, j), id(level, j2));
  for (int level = 1; level <= 6; ++level)
    for (int j = 1; j <= r; ++j)
      for (int j2 = 1; j2 <= r; ++j2) add(id(level, j), id(level + 1, j2));

  GeneratedGraph out;
  out.graph = Graph::from_edges(n, edges);
  out.labels.assign(n, "");
  out.labels[0] = "x";
  for (int level = 1; level <= 7; ++level)
    for (int j = 1; j <= r; ++j)
      out.labels[id(level, j)] =
          "u" + std::to_string(level) + "," + std::to_string(j);
  return out;
}

GeneratedGraph paper_fig1() {
  GeneratedGraph out;
  out.graph = parse_edge_list(kFig1EdgeList);
  out.labels = {"x",  "c1", "c2", "c3", "c4", "b1", "b2",
                "b3", "b4", "a1", "a2", "a3", "a4"};
  return out;
}

Graph delta_third_tight_graph() {
  // apex x adjacent to twelve vertices forming four spokes a-b-c, plus y over
  // the a-row; the minimum of p over all vertices is attained at y
  const int x = 0, y = 1;
  auto a = [](int i) { return 2 + i; };
  auto b = [](int i) { return 6 + i; };
  auto c = [](int i) { return 10 + i; };
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) {
    edges.emplace_back(x, a(i));
    edges.emplace_back(x, b(i));
    edges.emplace_back(x, c(i));
    edges.emplace_back(a(i), b(i));
    edges.emplace_back(b(i), c(i));
    edges.emplace_back(y, a(i));
  }
  return Graph::from_edges(14, edges);
}

Graph bipartite_half_tight_graph() {
  const int x = 0, y = 1;
  auto d = [](int i) { return 2 + i; };
  auto f = [](int i) { return 6 + i; };
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) {
    edges.emplace_back(x, d(i));
    edges.emplace_back(x, f(i));
    edges.emplace_back(y, f(i));
  }
  return Graph::from_edges(10, edges);
}

Graph boundary_tight_graph() {
  // path u1..u6 with a hub y over u2,u3,u4 and a pendant x under y;
  // boundary of x is {u1, u3, u6} and is a maximum x-position set
  const int y = 6, x = 7;
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4},
                          {4, 5}, {1, y}, {2, y}, {3, y}, {x, y}};
  return Graph::from_edges(8, edges);
}

GeneratedGraph generate(const FamilySpec& spec) {
  using F = FamilySpec::Family;
  auto want_sizes = [&](size_t count, const char* what) {
    if (spec.sizes.size() != count) bad_spec(std::string(what));
  };
  GeneratedGraph out;
  switch (spec.family) {
    case F::kPath:
      want_sizes(1, "path:n");
      out.graph = path_graph(static_cast<int>(spec.sizes[0]));
      return out;
    case F::kCycle:
      want_sizes(1, "cycle:n");
      out.graph = cycle_graph(static_cast<int>(spec.sizes[0]));
      return out;
    case F::kComplete:
      want_sizes(1, "complete:n");
      out.graph = complete_graph(static_cast<int>(spec.sizes[0]));
      return out;
    case F::kCompleteMultipartite:
      out.graph = complete_multipartite(spec.sizes);
      return out;
    case F::kStar:
      want_sizes(1, "star:leaves");
      out.graph = join(complete_graph(1), empty_graph(static_cast<int>(spec.sizes[0])));
      return out;
    case F::kTreeRandom:
      want_sizes(1, "tree-random:n[,seed=s]");
      out.graph = random_tree(static_cast<int>(spec.sizes[0]), spec.seed);
      return out;
    case F::kBlockGraphRandom:
      want_sizes(2, "blockGraph-random:blocks,maxBlock[,seed=s]");
      out.graph = random_block_graph(static_cast<int>(spec.sizes[0]),
                                     static_cast<int>(spec.sizes[1]), spec.seed);
      return out;
    case F::kKneser:
      want_sizes(2, "kneser:n,k");
      out.graph = kneser_graph(static_cast<int>(spec.sizes[0]),
                               static_cast<int>(spec.sizes[1]));
      return out;
    case F::kPetersen:
      want_sizes(0, "petersen");
      out.graph = kneser_graph(5, 2);
      return out;
    case F::kPaperGr:
      want_sizes(1, "paperG_r:r");
      return paper_g_r(static_cast<int>(spec.sizes[0]));
    case F::kPaperFig1:
      want_sizes(0, "paperFig1");
      return paper_fig1();
    case F::kGnpRandom:
      want_sizes(1, "gnp:n,p[,seed=s]");
      out.graph = random_gnp(static_cast<int>(spec.sizes[0]), spec.p, spec.seed);
      return out;
  }
  bad_spec("unhandled family");
}

}  // namespace vpos
