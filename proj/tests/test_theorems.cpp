#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "vpos/generators.hpp"
#include "vpos/io.hpp"
#include "vpos/theorems.hpp"

using namespace vpos;

TEST_CASE("builtin check list is complete and unique") {
  const auto& checks = builtin_checks();
  CHECK(checks.size() >= 24);
  std::set<std::string> ids;
  for (const TheoremCheck& c : checks) {
    CHECK(!c.id.empty());
    CHECK(!c.statement.empty());
    ids.insert(c.id);
  }
  CHECK(ids.size() == checks.size());
  CHECK_NOTHROW(find_check("lem-degree-bound"));
  CHECK_THROWS_AS(find_check("no-such-check"), std::invalid_argument);
}

TEST_CASE("degree bound check passes on the small census") {
  Corpus corpus = census_corpus_connected(5);
  TheoremReport r = run_check(find_check("lem-degree-bound"), corpus, "n<=5");
  CHECK(r.tested == 31);  // 1+1+2+6+21
  CHECK(r.skipped == 0);
  CHECK(r.passed == r.tested);
  CHECK(r.counterexamples.empty());
  CHECK(r.passed + static_cast<long>(r.counterexamples.size()) == r.tested);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  const TheoremCheck& trees = find_check("cor-trees");
  HarnessOptions opt;
  opt.seed = 5;
  Corpus c1 = trees.default_corpus(5);
  Corpus c2 = trees.default_corpus(5);
  REQUIRE(c1.size() == c2.size());
  for (size_t i = 0; i < c1.size(); ++i)
    CHECK(encode_graph6(c1[i].graph) == encode_graph6(c2[i].graph));
  TheoremReport r1 = run_check(trees, c1, "trees", opt);
  TheoremReport r2 = run_check(trees, c2, "trees", opt);
  CHECK(r1.tested == r2.tested);
  CHECK(r1.passed == r2.passed);
}

TEST_CASE("a failing assertion produces a replayable counterexample") {
  TheoremCheck bogus{
      "test-bogus",
      "every graph has at least three vertices (deliberately false)",
      "small census",
      [](uint64_t) { return census_corpus_connected(3); },
      [](const CorpusItem&) { return true; },
      [](const CorpusItem& it, const CheckContext&) -> std::vector<std::string> {
        if (it.graph.n() < 3) return {"graph too small"};
        return {};
      }};
  Corpus corpus = census_corpus_connected(3);
  TheoremReport r = run_check(bogus, corpus, "n<=3");
  CHECK(r.tested == 4);
  CHECK(r.passed == 2);
  CHECK(r.counterexamples.size() == 2);
  CHECK(r.passed + static_cast<long>(r.counterexamples.size()) == r.tested);
  // the counterexample replays: decode and re-test
  Graph replay = parse_graph6(r.counterexamples[0].graph6);
  CHECK(replay.n() < 3);
}

TEST_CASE("a throwing check is recorded as a counterexample, not a crash") {
  TheoremCheck thrower{
      "test-thrower",
      "always throws",
      "single graph",
      [](uint64_t) { return census_corpus_connected(1); },
      [](const CorpusItem&) { return true; },
      [](const CorpusItem&, const CheckContext&) -> std::vector<std::string> {
        throw std::runtime_error("boom");
      }};
  Corpus corpus = census_corpus_connected(1);
  TheoremReport r = run_check(thrower, corpus, "K1");
  CHECK(r.tested == 1);
  CHECK(r.counterexamples.size() == 1);
  CHECK(r.counterexamples[0].detail.find("boom") != std::string::npos);
}

TEST_CASE("kneser guard admits (10,2) and rejects (5,2)") {
  const TheoremCheck& kneser = find_check("thm-kneser");
  Corpus corpus = kneser.default_corpus(1);
  REQUIRE(corpus.size() == 4);
  CHECK(!kneser.applicable(corpus[0]));  // (5,2): the Petersen exception
  CHECK(kneser.applicable(corpus[1]));   // (10,2)
  TheoremReport r = run_check(kneser, corpus, "kneser fixtures");
  CHECK(r.skipped == 1);
  CHECK(r.tested == 3);
  CHECK(r.counterexamples.empty());
}

TEST_CASE("multipartite formula check on its sweep corpus") {
  const TheoremCheck& check = find_check("thm-multipartite");
  Corpus corpus = check.default_corpus(1);
  CHECK(corpus.size() == 87);  // partitions of 2..9 into >= 2 parts
  TheoremReport r = run_check(check, corpus, "sweep");
  CHECK(r.counterexamples.empty());
  CHECK(r.tested == 87);
}

TEST_CASE("nordhaus-gaddum check passes on all graphs up to n = 5") {
  Corpus corpus = census_corpus_all(5);
  TheoremReport r = run_check(find_check("thm-nordhaus-gaddum"), corpus, "all n<=5");
  CHECK(r.counterexamples.empty());
  CHECK(r.tested == 51);  // 2+4+11+34 graphs with n >= 2
  CHECK(r.skipped == 1);  // K1
}

TEST_CASE("fixture-backed checks pass quickly") {
  for (const char* id : {"lem-G-r", "cor-join", "thm-girth"}) {
    const TheoremCheck& check = find_check(id);
    Corpus corpus = check.default_corpus(3);
    TheoremReport r = run_check(check, corpus, "default", HarnessOptions{.threads = 0});
    CHECK_MESSAGE(r.counterexamples.empty(), id);
    CHECK(r.tested > 0);
  }
}

TEST_CASE("characterisation checks pass on the n <= 6 census") {
  Corpus corpus = census_corpus_connected(6);
  for (const char* id :
       {"cor-universal", "cor-cycles", "lem-n-minus-2", "thm-k222", "thm-n2-n1",
        "lem-cutvertex-free", "lem-equiv-reduced"}) {
    TheoremReport r =
        run_check(find_check(id), corpus, "n<=6", HarnessOptions{.threads = 0});
    CHECK_MESSAGE(r.counterexamples.empty(), id);
  }
}
