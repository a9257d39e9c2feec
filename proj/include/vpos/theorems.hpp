#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vpos/graph.hpp"
#include "vpos/solver.hpp"

namespace vpos {

struct CorpusItem {
  Graph graph;
  std::string name;                    // label used in reports
  std::string tag;                     // family tag for checks that need provenance
  std::map<std::string, long> params;  // family parameters and expected values
};
using Corpus = std::vector<CorpusItem>;

struct Counterexample {
  std::string graph6;
  std::string detail;
};

struct TheoremReport {
  std::string id;
  std::string corpus;
  long tested = 0;
  long skipped = 0;
  long passed = 0;
  std::vector<Counterexample> counterexamples;  // sorted; empty on pass
};

struct CheckContext {
  SolveOptions solve;  // self_check propagates into every solver call
};

// One machine-checkable statement: an applicability predicate plus an
// assertion that returns failure details (empty = pass). Checks never error
// on inapplicable graphs; they skip.
struct TheoremCheck {
  std::string id;
  std::string statement;
  std::string corpus_note;
  std::function<Corpus(uint64_t seed)> default_corpus;
  std::function<bool(const CorpusItem&)> applicable;
  std::function<std::vector<std::string>(const CorpusItem&, const CheckContext&)> check;
};

const std::vector<TheoremCheck>& builtin_checks();
const TheoremCheck& find_check(std::string_view id);  // throws std::invalid_argument

struct HarnessOptions {
  int threads = 1;  // parallelism across corpus graphs
  uint64_t seed = 1;
  bool self_check = false;
};

TheoremReport run_check(const TheoremCheck& check, const Corpus& corpus,
                        const std::string& corpus_desc,
                        const HarnessOptions& opt = {});

// Common corpora.
Corpus census_corpus_connected(int max_n);  // every connected graph, n <= max_n
Corpus census_corpus_all(int max_n);        // disconnected included

}  // namespace vpos
