#include "vpos/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "vpos/census.hpp"
#include "vpos/generators.hpp"
#include "vpos/io.hpp"
#include "vpos/metrics.hpp"
#include "vpos/oracle.hpp"
#include "vpos/solver.hpp"
#include "vpos/theorems.hpp"

namespace vpos {

namespace {

using nlohmann::ordered_json;

struct NamedGraph {
  Graph graph;
  std::vector<std::string> labels;
};

std::string read_source(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    std::ostringstream buf;
    buf << stdin_stream.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_edge_list(const std::string& text) {
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    start = end + 1;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    std::istringstream iss(line);
    long a, b;
    std::string extra;
    if (iss >> a) return static_cast<bool>(iss >> b) && !(iss >> extra);
  }
  return false;
}

std::vector<NamedGraph> load_graphs(const std::string& in_path,
                                    const std::string& gen_spec,
                                    std::istream& stdin_stream) {
  std::vector<NamedGraph> out;
  if (!gen_spec.empty()) {
    GeneratedGraph g = generate(FamilySpec::parse(gen_spec));
    out.push_back({std::move(g.graph), std::move(g.labels)});
    return out;
  }
  std::string text = read_source(in_path, stdin_stream);
  if (looks_like_edge_list(text)) {
    out.push_back({parse_edge_list(text), {}});
    return out;
  }
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    start = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back({parse_graph6(line), {}});
  }
  if (out.empty()) throw ParseError("no graphs in input", 0);
  return out;
}

std::string vertex_name(const NamedGraph& g, int v) {
  if (v < static_cast<int>(g.labels.size()) && !g.labels[v].empty())
    return g.labels[v];
  return std::to_string(v);
}

ordered_json witness_json(const std::vector<int>& witness) {
  ordered_json arr = ordered_json::array();
  for (int v : witness) arr.push_back(v);
  return arr;
}

void print_px(std::ostream& out, const std::string& format, const NamedGraph& g,
              const PositionResult& r) {
  if (format == "json") {
    ordered_json j;
    j["n"] = g.graph.n();
    j["root"] = r.root;
    j["p_x"] = r.value;
    j["witness"] = witness_json(r.witness);
    j["method"] = r.method == SolveMethod::kPolynomial ? "polynomial" : "oracle";
    if (r.cross_check) {
      j["cross_check"]["oracle_value"] = r.cross_check->oracle_value;
      j["cross_check"]["match"] = r.cross_check->match;
    }
    out << j.dump() << "\n";
    return;
  }
  if (format == "tsv") {
    out << g.graph.n() << "\t" << r.root << "\t" << r.value << "\t";
    for (size_t i = 0; i < r.witness.size(); ++i)
      out << (i ? "," : "") << r.witness[i];
    out << "\n";
    return;
  }
  out << "p_" << vertex_name(g, r.root) << " = " << r.value << "  witness {";
  for (size_t i = 0; i < r.witness.size(); ++i)
    out << (i ? " " : "") << vertex_name(g, r.witness[i]);
  out << "}";
  if (r.cross_check)
    out << "  oracle " << r.cross_check->oracle_value
        << (r.cross_check->match ? " (match)" : " (MISMATCH)");
  out << "\n";
}

void print_vp(std::ostream& out, const std::string& format, const NamedGraph& g,
              const VpSummary& s) {
  if (format == "json") {
    ordered_json j;
    j["n"] = g.graph.n();
    j["vp"] = s.vp;
    j["vp_minus"] = s.vp_minus;
    j["argmax"] = witness_json(s.argmax);
    j["argmin"] = witness_json(s.argmin);
    j["p"] = witness_json(s.p);
    out << j.dump() << "\n";
    return;
  }
  if (format == "tsv") {
    out << g.graph.n() << "\t" << s.vp << "\t" << s.vp_minus << "\n";
    return;
  }
  out << "vp = " << s.vp << " (at";
  for (int v : s.argmax) out << " " << vertex_name(g, v);
  out << "), vp- = " << s.vp_minus << " (at";
  for (int v : s.argmin) out << " " << vertex_name(g, v);
  out << ")\n";
}

Corpus parse_corpus_arg(const std::string& arg) {
  if (arg.rfind("n<=", 0) == 0) {
    int k = std::stoi(arg.substr(3));
    if (k < 1 || k > 8) throw ParseError("census corpus supports n<=8", 0);
    return census_corpus_connected(k);
  }
  if (arg.rfind("family:", 0) == 0) {
    FamilySpec spec = FamilySpec::parse(arg.substr(7));
    GeneratedGraph g = generate(spec);
    Corpus c;
    c.push_back({std::move(g.graph), spec.to_string(), "family", {}});
    return c;
  }
  throw ParseError("bad --corpus (expected n<=K or family:SPEC)", 0);
}

int cmd_verify(std::ostream& out, const std::string& which,
               const std::string& corpus_arg, const std::string& format,
               const HarnessOptions& opt) {
  std::vector<const TheoremCheck*> selected;
  if (which == "all") {
    for (const TheoremCheck& c : builtin_checks()) selected.push_back(&c);
  } else {
    selected.push_back(&find_check(which));
  }

  std::vector<TheoremReport> reports;
  bool any_counterexample = false;
  for (const TheoremCheck* check : selected) {
    Corpus corpus;
    std::string desc;
    if (!corpus_arg.empty()) {
      corpus = parse_corpus_arg(corpus_arg);
      desc = corpus_arg;
    } else {
      corpus = check->default_corpus(opt.seed);
      desc = check->corpus_note;
    }
    TheoremReport report = run_check(*check, corpus, desc, opt);
    any_counterexample |= !report.counterexamples.empty();
    reports.push_back(std::move(report));
  }

  if (format == "json") {
    ordered_json j;
    j["seed"] = opt.seed;
    j["checks"] = ordered_json::array();
    for (const TheoremReport& r : reports) {
      ordered_json c;
      c["id"] = r.id;
      c["corpus"] = r.corpus;
      c["tested"] = r.tested;
      c["skipped"] = r.skipped;
      c["passed"] = r.passed;
      c["counterexamples"] = ordered_json::array();
      for (const Counterexample& cex : r.counterexamples) {
        ordered_json e;
        e["graph6"] = cex.graph6;
        e["detail"] = cex.detail;
        c["counterexamples"].push_back(e);
      }
      j["checks"].push_back(c);
    }
    j["ok"] = !any_counterexample;
    out << j.dump(2) << "\n";
  } else {
    for (const TheoremReport& r : reports) {
      out << (r.counterexamples.empty() ? "PASS" : "FAIL") << "  " << r.id
          << "  tested=" << r.tested << " skipped=" << r.skipped
          << " passed=" << r.passed << "  [" << r.corpus << "]\n";
      for (const Counterexample& cex : r.counterexamples)
        out << "      counterexample " << cex.graph6 << "  " << cex.detail << "\n";
    }
    // informational only: how far apart the two invariants get on the corpus
    double best_ratio = 0;
    std::string best_g6;
    Corpus ratio_corpus =
        corpus_arg.empty() ? census_corpus_connected(7) : parse_corpus_arg(corpus_arg);
    for (const CorpusItem& item : ratio_corpus) {
      if (item.graph.n() < 2 || connected_components(item.graph).size() > 1) continue;
      VpSummary s = solve_all(item.graph);
      if (s.vp_minus <= 0) continue;
      double ratio = static_cast<double>(s.vp) / s.vp_minus;
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best_g6 = encode_graph6(item.graph);
      }
    }
    if (best_ratio > 0) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.3f", best_ratio);
      out << "# info: max vp/vp- ratio on corpus = " << buf << " at " << best_g6
          << "\n";
    }
  }
  return any_counterexample ? 1 : 0;
}

int cmd_bench(std::ostream& out, const std::vector<int>& sizes, double p,
              uint64_t seed, int threads, const std::string& format) {
  using clock = std::chrono::steady_clock;
  ordered_json rows = ordered_json::array();
  std::vector<double> log_n, log_t;
  if (format != "json")
    out << "# n\tm\tt_serial_ms" << (threads != 1 ? "\tt_par_ms\tspeedup" : "")
        << "\n";
  for (int n : sizes) {
    Graph g = random_gnp(n, p, seed);
    auto t0 = clock::now();
    VpSummary serial = solve_all(g, SolveOptions{.threads = 1});
    auto t1 = clock::now();
    double serial_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double par_ms = 0;
    if (threads != 1) {
      auto t2 = clock::now();
      VpSummary par = solve_all(g, SolveOptions{.threads = threads});
      auto t3 = clock::now();
      par_ms = std::chrono::duration<double, std::milli>(t3 - t2).count();
      if (par.p != serial.p)
        throw std::logic_error("parallel and serial solve_all disagree");
    }
    if (format == "json") {
      ordered_json row;
      row["n"] = n;
      row["m"] = g.m();
      row["t_serial_ms"] = serial_ms;
      if (threads != 1) row["t_parallel_ms"] = par_ms;
      rows.push_back(row);
    } else {
      out << n << "\t" << g.m() << "\t" << serial_ms;
      if (threads != 1) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", par_ms > 0 ? serial_ms / par_ms : 0.0);
        out << "\t" << par_ms << "\t" << buf;
      }
      out << "\n";
    }
    if (serial_ms > 0) {
      log_n.push_back(std::log(static_cast<double>(n)));
      log_t.push_back(std::log(serial_ms));
    }
  }
  double exponent = 0;
  if (log_n.size() >= 2) {
    // least-squares slope of log t against log n
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < log_n.size(); ++i) {
      sx += log_n[i];
      sy += log_t[i];
      sxx += log_n[i] * log_n[i];
      sxy += log_n[i] * log_t[i];
    }
    double k = static_cast<double>(log_n.size());
    exponent = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  }
  if (format == "json") {
    ordered_json j;
    j["rows"] = rows;
    j["fitted_exponent"] = exponent;
    out << j.dump(2) << "\n";
  } else if (log_n.size() >= 2) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", exponent);
    out << "# fitted time ~ n^" << buf << "\n";
  }
  return 0;
}

int cmd_table1(std::ostream& out, const std::string& format) {
  GeneratedGraph fig = paper_fig1();
  std::vector<std::string> roots = {"x", "c1", "b1", "a1"};
  ordered_json rows = ordered_json::array();
  for (const std::string& label : roots) {
    int root = -1;
    for (int v = 0; v < fig.graph.n(); ++v)
      if (fig.labels[v] == label) root = v;
    PositionResult r = solve_px(fig.graph, root);
    if (format == "json") {
      ordered_json row;
      row["vertex"] = label;
      row["p"] = r.value;
      ordered_json w = ordered_json::array();
      for (int v : r.witness) w.push_back(fig.labels[v]);
      row["witness"] = w;
      rows.push_back(row);
    } else {
      out << label << "\t" << r.value << "\t{";
      for (size_t i = 0; i < r.witness.size(); ++i)
        out << (i ? " " : "") << fig.labels[r.witness[i]];
      out << "}\n";
    }
  }
  if (format == "json") out << rows.dump(2) << "\n";
  return 0;
}

int run_cli_inner(int argc, const char* const* argv, std::ostream& out,
                  std::ostream& err) {
  CLI::App app{"vertex position numbers of simple graphs"};
  app.require_subcommand(1);

  std::string in_path = "-", gen_spec, format = "table";
  int root = 0, threads = 0;
  bool self_check = false, cross_check = false;
  uint64_t seed = 1;

  auto add_io = [&](CLI::App* cmd, bool needs_root) {
    auto* in = cmd->add_option("--in", in_path, "input file or - for stdin");
    auto* gen = cmd->add_option("--gen", gen_spec, "family spec, e.g. cycle:6");
    in->excludes(gen);
    gen->excludes(in);
    cmd->add_option("--format", format, "table | json | tsv")
        ->check(CLI::IsMember({"table", "json", "tsv"}));
    if (needs_root) cmd->add_option("--root", root, "root vertex x")->required();
  };

  CLI::App* px = app.add_subcommand("px", "maximum x-position set and p_x");
  add_io(px, true);
  px->add_flag("--self-check", self_check, "assert solver invariants inline");
  px->add_flag("--cross-check", cross_check, "also run the brute-force oracle");
  px->add_option("--threads", threads, "worker threads (0 = all)");

  CLI::App* vp = app.add_subcommand("vp", "p_x for every root, vp and vp-");
  add_io(vp, false);
  vp->add_flag("--self-check", self_check, "assert solver invariants inline");
  vp->add_option("--threads", threads, "worker threads (0 = all)");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force spot checks");
  std::string oracle_mode = "px";
  oracle->add_option("mode", oracle_mode, "px | gp | alpha")->required();
  add_io(oracle, false);
  oracle->add_option("--root", root, "root vertex x (px mode)");
  OracleBudget budget;
  oracle->add_option("--max-vertices", budget.max_vertices_px,
                     "size budget for px mode");
  oracle->add_option("--max-vertices-gp", budget.max_vertices_gp,
                     "size budget for gp mode");

  CLI::App* gen_cmd = app.add_subcommand("gen", "emit a family member as graph6");
  std::string gen_what;
  gen_cmd->add_option("spec", gen_what, "family spec, e.g. kneser:7,2")->required();
  gen_cmd->add_option("--format", format, "g6 | edges")
      ->check(CLI::IsMember({"table", "g6", "edges"}));

  CLI::App* verify = app.add_subcommand("verify", "run the identity checks");
  std::string which = "all", corpus_arg;
  verify->add_option("check", which, "check id or 'all'");
  verify->add_option("--corpus", corpus_arg, "n<=K or family:SPEC");
  verify->add_option("--seed", seed, "seed for randomised corpora");
  verify->add_option("--threads", threads, "worker threads (0 = all)");
  verify->add_flag("--self-check", self_check, "assert solver invariants inline");
  verify->add_option("--format", format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* bench = app.add_subcommand("bench", "solve_all timing sweep");
  std::vector<int> sizes{250, 500, 1000, 2000};
  double gnp_p = 0.01;
  bench->add_option("--sizes", sizes, "vertex counts to sweep");
  bench->add_option("--p", gnp_p, "gnp edge probability");
  bench->add_option("--seed", seed, "gnp seed");
  bench->add_option("--threads", threads, "compare serial vs this many (0 = all)");
  bench->add_option("--format", format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* table1 = app.add_subcommand("table1", "p_x table of the bundled example");
  table1->add_option("--format", format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (px->parsed()) {
    auto graphs = load_graphs(in_path, gen_spec, std::cin);
    for (const NamedGraph& g : graphs) {
      if (root < 0 || root >= g.graph.n())
        throw ParseError("root out of range", 0);
      PositionResult r =
          solve_px(g.graph, root, SolveOptions{.threads = 1, .self_check = self_check});
      if (cross_check) {
        PositionResult o = oracle_px(g.graph, root);
        r.cross_check = CrossCheck{o.value, o.value == r.value};
      }
      print_px(out, format, g, r);
    }
    return 0;
  }
  if (vp->parsed()) {
    auto graphs = load_graphs(in_path, gen_spec, std::cin);
    for (const NamedGraph& g : graphs) {
      VpSummary s = solve_all(
          g.graph, SolveOptions{.threads = threads, .self_check = self_check});
      print_vp(out, format, g, s);
    }
    return 0;
  }
  if (oracle->parsed()) {
    auto graphs = load_graphs(in_path, gen_spec, std::cin);
    for (const NamedGraph& g : graphs) {
      if (oracle_mode == "px") {
        if (root < 0 || root >= g.graph.n())
          throw ParseError("root out of range", 0);
        PositionResult r = oracle_px(g.graph, root, budget);
        print_px(out, format, g, r);
      } else if (oracle_mode == "gp") {
        int gp = oracle_gp(g.graph, budget);
        if (format == "json") {
          ordered_json j;
          j["n"] = g.graph.n();
          j["gp"] = gp;
          out << j.dump() << "\n";
        } else {
          out << "gp = " << gp << "\n";
        }
      } else if (oracle_mode == "alpha") {
        int alpha = oracle_alpha(g.graph, budget);
        if (format == "json") {
          ordered_json j;
          j["n"] = g.graph.n();
          j["alpha"] = alpha;
          out << j.dump() << "\n";
        } else {
          out << "alpha = " << alpha << "\n";
        }
      } else {
        throw ParseError("oracle mode must be px, gp or alpha", 0);
      }
    }
    return 0;
  }
  if (gen_cmd->parsed()) {
    GeneratedGraph g = generate(FamilySpec::parse(gen_what));
    if (format == "edges") {
      out << g.graph.n() << " " << g.graph.m() << "\n";
      for (auto [u, v] : g.graph.edges()) {
        out << u << " " << v;
        if (!g.labels.empty())
          out << "  # " << g.labels[u] << " - " << g.labels[v];
        out << "\n";
      }
    } else {
      out << encode_graph6(g.graph) << "\n";
    }
    return 0;
  }
  if (verify->parsed()) {
    HarnessOptions opt;
    opt.threads = threads;
    opt.seed = seed;
    opt.self_check = self_check;
    return cmd_verify(out, which, corpus_arg, format, opt);
  }
  if (bench->parsed()) return cmd_bench(out, sizes, gnp_p, seed, threads, format);
  if (table1->parsed()) return cmd_table1(out, format);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  try {
    return run_cli_inner(argc, argv, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace vpos
