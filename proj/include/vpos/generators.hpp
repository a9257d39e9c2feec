#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vpos/graph.hpp"

namespace vpos {

// A deterministic constructor for one member of a named graph family.
// Text form examples: "cycle:6", "kneser:7,2", "completeMultipartite:2,2,2",
// "paperG_r:4", "gnp:20,0.3,seed=42", "tree-random:12,seed=7",
// "blockGraph-random:5,4,seed=3".
struct FamilySpec {
  enum class Family {
    kPath,
    kCycle,
    kComplete,
    kCompleteMultipartite,
    kStar,
    kTreeRandom,
    kBlockGraphRandom,
    kKneser,
    kPetersen,
    kPaperGr,
    kPaperFig1,
    kGnpRandom,
  };

  Family family = Family::kPath;
  std::vector<long> sizes;  // family-specific integer parameters
  double p = 0.0;           // gnp edge probability
  uint64_t seed = 1;

  static FamilySpec parse(std::string_view text);  // throws std::invalid_argument
  std::string to_string() const;
};

struct GeneratedGraph {
  Graph graph;
  std::vector<std::string> labels;  // empty when vertices are anonymous
};

GeneratedGraph generate(const FamilySpec& spec);

// Direct constructors used across tests and the harness.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_multipartite(const std::vector<long>& parts);
Graph kneser_graph(int n, int k);
Graph random_tree(int n, uint64_t seed);                       // uniform Prüfer
Graph random_block_graph(int blocks, int max_block, uint64_t seed);
Graph random_gnp(int n, double p, uint64_t seed);
GeneratedGraph paper_g_r(int r);      // the family separating vp-, gp and vp
GeneratedGraph paper_fig1();          // 13-vertex labelled example

// Tightness fixtures for the degree-based lower bounds and the boundary set.
Graph delta_third_tight_graph();      // vp- equals ceil((max degree + 1)/3)
Graph bipartite_half_tight_graph();   // bipartite, vp- equals max degree / 2
Graph boundary_tight_graph();         // boundary of vertex n-1 is a p_x-set

}  // namespace vpos
