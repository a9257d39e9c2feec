#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "vpos/generators.hpp"
#include "vpos/io.hpp"
#include "vpos/rng.hpp"

using namespace vpos;

TEST_CASE("graph construction enforces simplicity") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
  Graph g = Graph::from_edges(3, {{2, 0}, {0, 1}});
  CHECK(g.m() == 2);
  CHECK(g.neighbors(0) == std::vector<int>{1, 2});
  CHECK(g.has_edge(0, 2));
  CHECK(!g.has_edge(1, 2));
}

TEST_CASE("graph6 hand-decoded fixtures") {
  // 'D?{' = five vertices, bits 0000001111 column-major: a star at vertex 4
  Graph g = parse_graph6("D?{");
  CHECK(g.n() == 5);
  CHECK(g.m() == 4);
  std::set<Edge> expected{{0, 4}, {1, 4}, {2, 4}, {3, 4}};
  auto edges = g.edges();
  CHECK(std::set<Edge>(edges.begin(), edges.end()) == expected);

  Graph k1 = parse_graph6("@");
  CHECK(k1.n() == 1);
  CHECK(k1.m() == 0);

  Graph k2 = parse_graph6("A_");
  CHECK(k2.n() == 2);
  CHECK(k2.m() == 1);

  CHECK(encode_graph6(k1) == "@");
  CHECK(encode_graph6(k2) == "A_");
  CHECK(parse_graph6(">>graph6<<A_\n").m() == 1);
}

TEST_CASE("graph6 error cases name the byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);      // truncated body
  CHECK_THROWS_AS(parse_graph6("D?{{"), ParseError);    // trailing bytes
  CHECK_THROWS_AS(parse_graph6("D\x20{"), ParseError);  // char below 63
  // n=3 uses three data bits; 'x' = 111001 sets a padding bit
  CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);
  try {
    parse_graph6("D?\x14");
    FAIL("out-of-range byte accepted");
  } catch (const ParseError& e) {
    CHECK(e.offset == 2);
  }
}

TEST_CASE("graph6 round-trips on 10^4 random graphs") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    int n = static_cast<int>(rng.below(41));
    double p = rng.unit();
    Graph g = random_gnp(n, p, rng.next());
    Graph back = parse_graph6(encode_graph6(g));
    REQUIRE(back == g);
  }
  // a couple of spot shapes
  Graph c5 = cycle_graph(5);
  CHECK(parse_graph6(encode_graph6(c5)) == c5);
  CHECK(encode_graph6(path_graph(2)) == "A_");
}

TEST_CASE("graph6 long-form headers") {
  Graph g = random_gnp(80, 0.05, 7);
  std::string enc = encode_graph6(g);
  CHECK(static_cast<unsigned char>(enc[0]) == 126);
  CHECK(parse_graph6(enc) == g);

  // non-canonical eight-byte header encoding n = 2 is still readable
  Graph k2 = parse_graph6("~~?????A_");
  CHECK(k2.n() == 2);
  CHECK(k2.m() == 1);
  CHECK_THROWS_AS(parse_graph6("~"), ParseError);
}

TEST_CASE("edge list parsing") {
  Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
  CHECK(p3.n() == 3);
  CHECK(p3.m() == 2);

  Graph k4 = parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
  CHECK(k4.m() == 6);
  for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

  Graph commented = parse_edge_list("# leading comment\n\n2 1\n0 1  # the edge\n");
  CHECK(commented.m() == 1);
}

TEST_CASE("edge list errors carry line numbers") {
  try {
    parse_edge_list("2 1\n0 0");
    FAIL("self-loop accepted");
  } catch (const ParseError& e) {
    CHECK(e.offset == 2);
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n1 0"), ParseError);  // duplicate
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 2"), ParseError);       // out of range
  CHECK_THROWS_AS(parse_edge_list("2 2\n0 1"), ParseError);       // too few
  CHECK_THROWS_AS(parse_edge_list("x y"), ParseError);
}

TEST_CASE("complement and join") {
  Graph k5 = complete_graph(5);
  CHECK(complement(k5).m() == 0);

  // C5 is self-complementary: the complement is again connected and 2-regular
  Graph cc = complement(cycle_graph(5));
  CHECK(cc.m() == 5);
  for (int v = 0; v < 5; ++v) CHECK(cc.degree(v) == 2);

  SplitMix64 rng(99);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_gnp(static_cast<int>(rng.below(20)), rng.unit(), rng.next());
    CHECK(complement(complement(g)) == g);
  }

  Graph star = join(complete_graph(1), empty_graph(3));
  CHECK(star.n() == 4);
  CHECK(star.m() == 3);
  CHECK(star.degree(0) == 3);

  CHECK(join(complete_graph(2), complete_graph(2)) == complete_graph(4));
  Graph k23 = join(empty_graph(2), empty_graph(3));
  CHECK(k23.m() == 6);

  Graph g1 = random_gnp(6, 0.4, 5), g2 = random_gnp(7, 0.6, 6);
  Graph j = join(g1, g2);
  CHECK(j.n() == 13);
  CHECK(j.m() == g1.m() + g2.m() + 42);
}
