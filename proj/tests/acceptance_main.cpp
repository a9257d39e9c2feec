// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 1-5 run every solver call with inline structural
// self-checks enabled; criterion 6 reports on them.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "vpos/census.hpp"
#include "vpos/generators.hpp"
#include "vpos/io.hpp"
#include "vpos/metrics.hpp"
#include "vpos/oracle.hpp"
#include "vpos/rng.hpp"
#include "vpos/solver.hpp"
#include "vpos/theorems.hpp"

using namespace vpos;
using clock_type = std::chrono::steady_clock;

namespace {

bool g_ran_1_to_5 = false;
bool g_inline_asserts_ok = false;

SolveOptions checked() {
  SolveOptions o;
  o.self_check = true;
  return o;
}

struct Criterion {
  int id;
  std::function<std::string()> run;  // returns "" on pass, else failure text
};

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::string criterion1() {
  auto fig = paper_fig1();
  auto start = clock_type::now();
  const std::vector<std::pair<int, int>> expected{{0, 4}, {1, 8}, {5, 11}, {9, 7}};
  for (auto [root, value] : expected) {
    PositionResult r = solve_px(fig.graph, root, checked());
    if (r.value != value)
      return "p_" + fig.labels[root] + " = " + std::to_string(r.value) +
             ", expected " + std::to_string(value);
  }
  double t = seconds_since(start);
  if (t >= 1.0) return "table took " + std::to_string(t) + " s (budget 1 s)";
  return "";
}

std::string criterion2() {
  auto start = clock_type::now();
  const size_t expected_counts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  long long mismatches = 0, compared = 0;
  for (int n = 1; n <= 8; ++n) {
    auto census = enumerate_small_connected(n);
    if (census.size() != expected_counts[n])
      return "census size at n=" + std::to_string(n) + " is " +
             std::to_string(census.size()) + ", expected " +
             std::to_string(expected_counts[n]);
    for (const Graph& g : census)
      for (int x = 0; x < g.n(); ++x) {
        ++compared;
        if (solve_px(g, x, checked()).value != oracle_px(g, x).value) {
          ++mismatches;
          if (mismatches == 1)
            std::fprintf(stderr, "first mismatch: %s root %d\n",
                         encode_graph6(g).c_str(), x);
        }
      }
  }
  SplitMix64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    int n = 2 + static_cast<int>(rng.below(11));  // 2..12
    double p = 0.1 + 0.8 * rng.unit();
    Graph g = random_gnp(n, p, rng.next());
    for (int x = 0; x < n; ++x) {
      ++compared;
      if (solve_px(g, x, checked()).value != oracle_px(g, x).value) ++mismatches;
    }
  }
  double t = seconds_since(start);
  if (mismatches > 0)
    return std::to_string(mismatches) + " mismatches in " +
           std::to_string(compared) + " comparisons";
  if (t > 600.0) return "run took " + std::to_string(t) + " s (budget 600 s)";
  return "";
}

std::string criterion3() {
  // cycles: every root of C_3..C_50 has p_x = 2
  for (int n = 3; n <= 50; ++n) {
    VpSummary s = solve_all(cycle_graph(n), checked());
    for (int x = 0; x < n; ++x)
      if (s.p[x] != 2) return "cycle C" + std::to_string(n) + " has p != 2";
  }
  // complete graphs: p_x = n - 1
  for (int n = 1; n <= 25; ++n) {
    VpSummary s = solve_all(complete_graph(n), checked());
    for (int x = 0; x < n; ++x)
      if (s.p[x] != n - 1) return "K" + std::to_string(n) + " has p != n-1";
  }
  // paths: terminals score exactly 1
  for (int n = 2; n <= 40; ++n) {
    Graph p = path_graph(n);
    if (solve_px(p, 0, checked()).value != 1 ||
        solve_px(p, n - 1, checked()).value != 1)
      return "P" + std::to_string(n) + " terminal p != 1";
  }
  HarnessOptions opt;
  opt.self_check = true;
  opt.threads = 0;
  // trees and block graphs via their formula checks (100 seeded instances each)
  for (const char* id : {"cor-trees", "thm-block-graph", "thm-multipartite"}) {
    const TheoremCheck& check = find_check(id);
    TheoremReport r = run_check(check, check.default_corpus(opt.seed),
                                check.corpus_note, opt);
    if (!r.counterexamples.empty())
      return std::string(id) + ": " + r.counterexamples.front().detail;
    if (r.tested == 0) return std::string(id) + ": empty corpus";
  }
  // even cliques minus a perfect matching: vp- = vp = n-2
  for (int r = 2; r <= 6; ++r) {
    std::vector<long> parts(r, 2);
    VpSummary s = solve_all(complete_multipartite(parts), checked());
    if (s.vp != 2 * r - 2 || s.vp_minus != 2 * r - 2)
      return "K_{2x" + std::to_string(r) + "} vp mismatch";
  }
  // the split-level family
  for (int r = 3; r <= 6; ++r) {
    auto gen = paper_g_r(r);
    VpSummary s = solve_all(gen.graph, checked());
    if (s.vp_minus != r) return "G(r): vp- != r at r=" + std::to_string(r);
    if (s.vp != 6 * r - 4) return "G(r): vp != 6r-4 at r=" + std::to_string(r);
  }
  {
    OracleBudget budget;
    budget.max_vertices_gp = 22;
    if (oracle_gp(paper_g_r(3).graph, budget) != 6) return "G(3): gp != 6";
  }
  // Petersen: p_x = 6 at every root
  {
    VpSummary s = solve_all(kneser_graph(5, 2), checked());
    for (int x = 0; x < 10; ++x)
      if (s.p[x] != 6) return "Petersen p != 6";
  }
  // Kneser(10,2): vp = C(8,2) = 28
  {
    VpSummary s = solve_all(kneser_graph(10, 2), checked());
    if (s.vp != 28) return "K(10,2) vp = " + std::to_string(s.vp) + ", expected 28";
  }
  return "";
}

std::string run_named_checks(const std::vector<const char*>& ids) {
  HarnessOptions opt;
  opt.self_check = true;
  opt.threads = 0;
  for (const char* id : ids) {
    const TheoremCheck& check = find_check(id);
    TheoremReport r =
        run_check(check, check.default_corpus(opt.seed), check.corpus_note, opt);
    if (!r.counterexamples.empty())
      return std::string(id) + ": " + std::to_string(r.counterexamples.size()) +
             " counterexamples, first " + r.counterexamples.front().graph6 +
             " (" + r.counterexamples.front().detail + ")";
    if (r.tested == 0) return std::string(id) + ": nothing tested";
  }
  return "";
}

std::string criterion4() {
  return run_named_checks({"lem-degree-bound", "lem-eccentricity-lower",
                           "lem-eccentricity-upper", "thm-delta-third",
                           "thm-radius3", "thm-bipartite-alpha", "thm-girth",
                           "prop-boundary", "lem-vp-vs-gp",
                           "thm-nordhaus-gaddum"});
}

std::string criterion5() {
  return run_named_checks({"cor-universal", "cor-cycles", "thm-k222",
                           "thm-n2-n1", "lem-n-minus-2"});
}

std::string criterion6() {
  if (!g_ran_1_to_5) {
    // standalone run: exercise the inline asserts directly
    SolveOptions opt = checked();
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : enumerate_small_connected(n))
        for (int x = 0; x < g.n(); ++x) solve_px(g, x, opt);
    SplitMix64 rng(83);
    for (int i = 0; i < 50; ++i) {
      Graph g = random_gnp(2 + static_cast<int>(rng.below(12)), rng.unit(),
                           rng.next());
      solve_all(g, opt);
    }
    auto fig = paper_fig1();
    solve_all(fig.graph, opt);
    solve_all(paper_g_r(4).graph, opt);
    return "";
  }
  if (!g_inline_asserts_ok)
    return "a structural invariant fired during criteria 1-5";
  return "";
}

std::string criterion7() {
  // headline instance: sparse random graph with two thousand vertices
  {
    Graph g = random_gnp(2000, 0.01, 1);
    auto start = clock_type::now();
    VpSummary s = solve_all(g, SolveOptions{.threads = 1});
    double t = seconds_since(start);
    std::fprintf(stderr, "  n=2000 m=%d solve_all serial: %.1f s (vp=%d, vp-=%d)\n",
                 g.m(), t, s.vp, s.vp_minus);
    if (t >= 60.0)
      return "solve_all(G(2000, 0.01)) took " + std::to_string(t) +
             " s single-threaded (budget 60 s)";
  }
  // scaling fit: superlinear but polynomial
  std::vector<int> sizes{400, 800, 1600};
  std::vector<double> log_n, log_t;
  for (int n : sizes) {
    Graph g = random_gnp(n, 0.01, 2);
    auto start = clock_type::now();
    solve_all(g, SolveOptions{.threads = 1});
    double t = seconds_since(start);
    log_n.push_back(std::log(static_cast<double>(n)));
    log_t.push_back(std::log(std::max(t, 1e-4)));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < log_n.size(); ++i) {
    sx += log_n[i];
    sy += log_t[i];
    sxx += log_n[i] * log_n[i];
    sxy += log_n[i] * log_t[i];
  }
  double k = static_cast<double>(log_n.size());
  double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  std::fprintf(stderr, "  fitted solve_all time ~ n^%.2f\n", slope);
  if (slope < 1.1 || slope > 3.8) {
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "scaling exponent %.2f outside the polynomial window", slope);
    return buf;
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  if (wanted.empty()) wanted = {1, 2, 3, 4, 5, 6, 7};

  std::vector<Criterion> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}};

  bool ran_all_first_five = true;
  for (int c : {1, 2, 3, 4, 5})
    if (std::find(wanted.begin(), wanted.end(), c) == wanted.end())
      ran_all_first_five = false;

  int failures = 0;
  bool first_five_clean = true;
  for (const Criterion& c : criteria) {
    if (std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    if (c.id == 6 && ran_all_first_five) {
      // criteria 1-5 already ran every solver call with inline asserts on;
      // any fired assert surfaced as a failure there
      g_ran_1_to_5 = true;
      g_inline_asserts_ok = first_five_clean;
    }
    auto start = clock_type::now();
    std::string failure;
    try {
      failure = c.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    double t = seconds_since(start);
    if (c.id <= 5 && !failure.empty()) first_five_clean = false;
    char line[512];
    std::snprintf(line, sizeof(line), "C%d %s  [%.2f s]%s%s", c.id,
                  failure.empty() ? "PASS" : "FAIL", t,
                  failure.empty() ? "" : "  ", failure.c_str());
    std::cout << line << std::endl;
    if (!failure.empty()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
