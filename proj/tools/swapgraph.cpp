#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "swapgraph/enumerator.hpp"
#include "swapgraph/error.hpp"
#include "swapgraph/oracle.hpp"
#include "swapgraph/pathfinder.hpp"
#include "swapgraph/structure.hpp"

using namespace swapgraph;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;
constexpr const char* kSkipped = "SKIPPED (too large)";

struct Options {
  std::uint64_t max_vertices = oracle::kDefaultMaxVertices;
  int alphabet_size = 0;
};

std::uint64_t default_cap() {
  if (const char* env = std::getenv("SWAPGRAPH_MAX_VERTICES")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed SWAPGRAPH_MAX_VERTICES\n";
    }
  }
  return oracle::kDefaultMaxVertices;
}

bool fits(const ParikhVector& p, const Options& opt) { return count_words(p) <= opt.max_vertices; }

EnumerationStrategy parse_strategy(const std::string& name) {
  if (name == "binary") return EnumerationStrategy::kBinary;
  if (name == "general") return EnumerationStrategy::kGeneral;
  return EnumerationStrategy::kAuto;
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  std::string word;
  bool verbose = false;
  std::optional<std::uint64_t> limit;
  std::string checkpoint;
  std::string resume_from;
  std::string strategy = "auto";
};

int run_enumerate(const EnumerateArgs& a, const Options& opt) {
  const auto strategy = parse_strategy(a.strategy);
  std::optional<Enumerator> e;
  Word start;
  std::uint64_t emitted = 0;
  if (!a.resume_from.empty()) {
    std::ifstream in(a.resume_from);
    if (!in) throw Error(Errc::kParse, "cannot read " + a.resume_from);
    std::stringstream text;
    text << in.rdbuf();
    const auto cp = Checkpoint::parse(text.str());
    start = cp.start;
    emitted = cp.emitted;
    e.emplace(resume(cp, strategy));
  } else {
    if (a.word.empty()) throw CLI::ValidationError("enumerate", "needs WORD or --resume");
    start = Word::parse(a.word, opt.alphabet_size);
    e.emplace(start, strategy);
  }

  std::uint64_t printed = 0;
  while (!a.limit || printed < *a.limit) {
    const auto s = e->next_swap();
    if (!s) break;
    ++printed;
    std::cout << s->to_string();
    if (a.verbose) std::cout << " → " << e->current_word().to_string();
    std::cout << std::endl;  // flush per line for downstream pipes
  }
  if (a.limit) {
    const Checkpoint cp{start, emitted + printed, e->current_word()};
    if (a.checkpoint.empty()) {
      std::cerr << cp.serialize();
    } else {
      std::ofstream out(a.checkpoint);
      out << cp.serialize();
    }
  }
  return kOk;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const std::string& word, bool hamiltonian, const Options& opt) {
  oracle::PathValidator validator(Word::parse(word, opt.alphabet_size), hamiltonian);
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      if (!validator.step(Swap::parse(line))) break;
    } catch (const Error& e) {
      validator.fail("malformed line '" + line + "': " + e.what());
      break;
    }
  }
  const auto r = validator.finish();
  std::cout << "valid=" << std::boolalpha << r.valid << " visits_all=" << r.visits_all
            << " repeats=" << r.repeats << " steps=" << r.steps << " visited=" << r.visited
            << " expected=" << r.expected.str();
  if (r.failure_step) std::cout << " failure_step=" << *r.failure_step;
  std::cout << '\n';
  if (!r.failure_reason.empty()) std::cout << "reason: " << r.failure_reason << '\n';
  const bool pass = hamiltonian ? r.hamiltonian() : r.valid;
  std::cout << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kOk : kInvalid;
}

// ---- formulas vs oracle ----------------------------------------------------

int run_diameter(const std::string& ptext, const Options& opt) {
  const auto p = ParikhVector::parse(ptext);
  std::cout << "formula=" << structure::diameter_formula(p) << " oracle=";
  if (fits(p, opt)) {
    std::cout << oracle::diameter(oracle::ConfigGraph::build(p, opt.max_vertices)) << '\n';
  } else {
    std::cout << kSkipped << '\n';
  }
  return kOk;
}

int run_distance(const std::string& w, const std::string& v, const Options& opt) {
  const Word a = Word::parse(w, opt.alphabet_size);
  const Word b = Word::parse(v, a.alphabet_size());
  const auto bound = structure::diameter_formula(parikh(a));
  std::cout << "distance=";
  if (a.size() == b.size() && parikh(a) == parikh(b) && !fits(parikh(a), opt)) {
    std::cout << kSkipped;
  } else {
    std::cout << pathfinder::exact_distance(a, b, opt.max_vertices);
  }
  std::cout << " bound=" << bound << '\n';
  return kOk;
}

int run_path(const std::string& w, const std::string& v, const Options& opt) {
  const Word a = Word::parse(w, opt.alphabet_size);
  const Word b = Word::parse(v, a.alphabet_size());
  const auto path = pathfinder::greedy_path(a, b);
  for (const auto& s : path) std::cout << s.to_string() << '\n';
  std::cerr << "length=" << path.size() << " bound=" << structure::diameter_formula(parikh(a))
            << '\n';
  return kOk;
}

struct CliqueSummary {
  std::size_t total = 0;
  std::size_t largest = 0;
  std::size_t per_vertex_min = 0;
  std::size_t per_vertex_max = 0;
};

CliqueSummary oracle_cliques(const ParikhVector& p, const Options& opt) {
  const auto g = oracle::ConfigGraph::build(p, opt.max_vertices);
  const auto cliques = oracle::maximal_cliques(g, opt.max_vertices);
  std::vector<std::size_t> per(g.size(), 0);
  CliqueSummary s;
  s.total = cliques.size();
  for (const auto& c : cliques) {
    s.largest = std::max(s.largest, c.size());
    for (auto v : c) ++per[v];
  }
  s.per_vertex_min = *std::min_element(per.begin(), per.end());
  s.per_vertex_max = *std::max_element(per.begin(), per.end());
  return s;
}

int run_cliques(const std::string& ptext, const Options& opt) {
  const auto p = ParikhVector::parse(ptext);
  std::cout << "clique_number=" << structure::clique_number(p)
            << " per_vertex=" << structure::cliques_per_vertex(p).str()
            << " per_vertex_derived=" << structure::cliques_per_vertex_derived(p).str()
            << " formula_total=" << structure::total_maximal_cliques_paper(p).str();
  if (!fits(p, opt)) {
    std::cout << " oracle_total=" << kSkipped << '\n';
    return kOk;
  }
  const auto s = oracle_cliques(p, opt);
  std::cout << " oracle_total=" << s.total << " oracle_largest=" << s.largest
            << " oracle_per_vertex=" << s.per_vertex_min;
  if (s.per_vertex_max != s.per_vertex_min) std::cout << ".." << s.per_vertex_max;
  std::cout << '\n';
  return kOk;
}

// Every Parikh vector of length sigma with positive counts and at most
// max_count words, sorted non-increasing (relabelings give isomorphic graphs).
void sorted_parikh_vectors(int sigma, std::uint64_t max_count, std::vector<std::uint64_t>& prefix,
                           std::uint64_t bound, std::vector<ParikhVector>& out) {
  if (static_cast<int>(prefix.size()) == sigma) {
    out.emplace_back(prefix);
    return;
  }
  for (std::uint64_t c = 1; c <= bound; ++c) {
    auto probe = prefix;
    probe.push_back(c);
    probe.resize(static_cast<std::size_t>(sigma), 1);
    if (count_words(ParikhVector(probe)) > max_count) break;
    prefix.push_back(c);
    sorted_parikh_vectors(sigma, max_count, prefix, c, out);
    prefix.pop_back();
  }
}

int run_cliques_report(int max_sigma, std::uint64_t max_count, std::uint64_t max_length,
                       const Options& opt) {
  for (int sigma = 2; sigma <= max_sigma; ++sigma) {
    std::vector<ParikhVector> ps;
    std::vector<std::uint64_t> prefix;
    sorted_parikh_vectors(sigma, max_count, prefix, max_count, ps);
    for (const auto& p : ps) {
      if (p.total() > max_length) continue;
      const auto formula = structure::total_maximal_cliques_paper(p);
      if (!fits(p, opt)) {
        std::cout << p.to_string() << " formula=" << formula.str() << " oracle=" << kSkipped << '\n';
        continue;
      }
      const auto s = oracle_cliques(p, opt);
      std::cout << structure::clique_comparison_line(p, formula, s.total) << '\n';
    }
  }
  return kOk;
}

int run_witness(const std::string& ptext, const Options& opt) {
  const auto p = ParikhVector::parse(ptext);
  const auto wp = structure::witness_pair(p);
  std::cout << wp.w.to_string() << ' ' << wp.v.to_string() << " distance=";
  if (fits(p, opt)) {
    std::cout << pathfinder::exact_distance(wp.w, wp.v, opt.max_vertices);
  } else {
    std::cout << kSkipped;
  }
  bool identity = true;
  for (std::size_t k = 0; k < wp.relabel.size(); ++k) identity = identity && wp.relabel[k] == Symbol(k + 1);
  if (!identity) {
    std::cout << " relabel=";
    for (std::size_t k = 0; k < wp.relabel.size(); ++k) std::cout << (k ? "," : "") << wp.relabel[k];
  }
  std::cout << '\n';
  return kOk;
}

std::string join(const std::vector<Position>& pi) {
  std::string out;
  for (std::size_t k = 0; k < pi.size(); ++k) out += (k ? "," : "") + std::to_string(pi[k]);
  return out;
}

int run_ball_iso(const std::string& u_text, const std::string& v_text, int radius, int probes,
                 std::uint64_t seed, const Options& opt) {
  const Word u = Word::parse(u_text, opt.alphabet_size);
  const Word v = Word::parse(v_text, u.alphabet_size());
  const auto p = parikh(u);
  if (!fits(p, opt)) {
    std::cout << kSkipped << '\n';
    return kOk;
  }
  const auto g = oracle::ConfigGraph::build(p, opt.max_vertices);
  const auto bu = oracle::ball(g, u, radius);
  const auto bv = oracle::ball(g, v, radius);
  const auto pi = structure::canonical_ball_map(u, v);
  const bool ok = oracle::check_isomorphism_map(bu, bv, pi);
  std::cout << "ball_size=" << bu.members.size() << " pi=" << join(pi)
            << " canonical=" << std::boolalpha << ok << '\n';
  int passed = 0;
  for (int k = 0; k < probes; ++k) {
    const auto other = structure::sampled_ball_map(u, v, seed + static_cast<std::uint64_t>(k));
    const bool pass = oracle::check_isomorphism_map(bu, bv, other);
    passed += pass;
    std::cout << "probe pi=" << join(other) << " accepted=" << pass << '\n';
  }
  if (probes > 0) std::cout << "noncanonical accepted=" << passed << '/' << probes << '\n';
  return ok ? kOk : kInvalid;
}

int run_probe(const std::string& ptext, std::uint64_t samples, std::uint64_t seed,
              bool counterexamples_only, const Options& opt) {
  const auto p = ParikhVector::parse(ptext);
  if (!fits(p, opt)) {
    std::cout << "summary P=" << p.to_string() << ' ' << kSkipped << '\n';
    return kOk;
  }
  const auto report = pathfinder::probe_conjecture(p, samples, seed, 40'000, opt.max_vertices);
  report.write(std::cout, counterexamples_only);
  return kOk;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoul(item));
  return out;
}

int run_bench_delay(const std::string& sizes, int sigma, std::uint64_t seed,
                    std::uint64_t max_steps) {
  std::cout << "n,sigma,max_ops,outputs" << std::endl;
  for (const auto n : parse_sizes(sizes)) {
    const Word w = balanced_random_word(n, sigma, seed + n);
    const auto stats = measure_delay(w, max_steps);
    std::cout << n << ',' << sigma << ',' << stats.max_ops_between_outputs << ','
              << stats.outputs << std::endl;
  }
  return kOk;
}

int run_export(const std::string& ptext, const std::string& format, const Options& opt) {
  const auto p = ParikhVector::parse(ptext);
  if (!fits(p, opt)) {
    std::cerr << kSkipped << '\n';
    return kUsage;
  }
  const auto g = oracle::ConfigGraph::build(p, opt.max_vertices);
  if (format == "edgelist") {
    g.write_edge_list(std::cout);
  } else {
    g.write_adjacency(std::cout);
  }
  return kOk;
}

int run_swap_graph(const std::string& w, const std::string& v, const Options& opt) {
  const Word a = Word::parse(w, opt.alphabet_size);
  const Word b = Word::parse(v, a.alphabet_size());
  pathfinder::SwapGraph(a, b).write_edge_list(std::cout);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-swap configuration graphs: enumeration, distances, cliques"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  opt.max_vertices = default_cap();
  app.add_option("--max-vertices", opt.max_vertices,
                 "Oracle vertex cap (env SWAPGRAPH_MAX_VERTICES)");
  app.add_option("--alphabet-size", opt.alphabet_size,
                 "Alphabet size; inferred from the largest symbol when omitted");

  std::function<int()> action;

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Hamiltonian path swap stream from WORD");
  enumerate->add_option("word", en.word, "Start word");
  enumerate->add_flag("--verbose", en.verbose, "Append the resulting word to each swap");
  enumerate->add_option("--limit", en.limit, "Stop after K swaps and emit a checkpoint");
  enumerate->add_option("--checkpoint", en.checkpoint, "Checkpoint file (default: stderr)");
  enumerate->add_option("--resume", en.resume_from, "Continue from a checkpoint file");
  enumerate->add_option("--strategy", en.strategy, "auto, binary or general")
      ->check(CLI::IsMember({"auto", "binary", "general"}));
  enumerate->callback([&] { action = [&] { return run_enumerate(en, opt); }; });

  std::string word_a;
  std::string word_b;
  std::string ptext;

  bool hamiltonian = false;
  auto* verify = app.add_subcommand("verify", "Validate a swap stream read from stdin");
  verify->add_option("word", word_a, "Start word")->required();
  verify->add_flag("--hamiltonian", hamiltonian, "Also require a Hamiltonian path");
  verify->callback([&] { action = [&] { return run_verify(word_a, hamiltonian, opt); }; });

  auto* diameter = app.add_subcommand("diameter", "Diameter formula and oracle value");
  diameter->add_option("parikh", ptext, "Parikh vector, e.g. 3,2")->required();
  diameter->callback([&] { action = [&] { return run_diameter(ptext, opt); }; });

  auto* distance = app.add_subcommand("distance", "Exact distance between two words");
  distance->add_option("w", word_a)->required();
  distance->add_option("v", word_b)->required();
  distance->callback([&] { action = [&] { return run_distance(word_a, word_b, opt); }; });

  auto* path = app.add_subcommand("path", "Greedy swap path from w to v");
  path->add_option("w", word_a)->required();
  path->add_option("v", word_b)->required();
  path->callback([&] { action = [&] { return run_path(word_a, word_b, opt); }; });

  auto* cliques = app.add_subcommand("cliques", "Clique formulas and oracle counts");
  cliques->add_option("parikh", ptext)->required();
  cliques->callback([&] { action = [&] { return run_cliques(ptext, opt); }; });

  int report_sigma = 4;
  std::uint64_t report_count = 2520;
  std::uint64_t report_length = 16;
  auto* report = app.add_subcommand("cliques-report", "Total clique formula vs oracle, per P");
  report->add_option("--max-sigma", report_sigma)->check(CLI::Range(2, 9));
  report->add_option("--max-count", report_count);
  report->add_option("--max-length", report_length);
  report->callback([&] {
    action = [&] { return run_cliques_report(report_sigma, report_count, report_length, opt); };
  });

  auto* witness = app.add_subcommand("witness", "Diameter witness pair");
  witness->add_option("parikh", ptext)->required();
  witness->callback([&] { action = [&] { return run_witness(ptext, opt); }; });

  int radius = 1;
  int probes = 0;
  std::uint64_t seed = 1;
  auto* ball_iso = app.add_subcommand("ball-iso", "Check the ball map between u and v");
  ball_iso->add_option("u", word_a)->required();
  ball_iso->add_option("v", word_b)->required();
  ball_iso->add_option("r", radius)->required()->check(CLI::NonNegativeNumber);
  ball_iso->add_option("--probes", probes, "Non-canonical maps to try");
  ball_iso->add_option("--seed", seed);
  ball_iso->callback(
      [&] { action = [&] { return run_ball_iso(word_a, word_b, radius, probes, seed, opt); }; });

  std::uint64_t samples = 1000;
  bool counterexamples_only = false;
  auto* probe = app.add_subcommand("probe", "Greedy length vs exact distance");
  probe->add_option("parikh", ptext)->required();
  probe->add_option("--samples", samples);
  probe->add_option("--seed", seed);
  probe->add_flag("--counterexamples-only", counterexamples_only);
  probe->callback([&] {
    action = [&] { return run_probe(ptext, samples, seed, counterexamples_only, opt); };
  });

  std::string sizes = "8,16,32,64,128,256,512,1024,2048,4096";
  int sigma = 2;
  std::uint64_t max_steps = 200'000;
  auto* bench = app.add_subcommand("bench-delay", "Delay counters on balanced random words");
  bench->add_option("--sizes", sizes);
  bench->add_option("--sigma", sigma)->check(CLI::Range(1, 1000));
  bench->add_option("--seed", seed);
  bench->add_option("--max-steps", max_steps, "Swaps per size (0 = full enumeration)");
  bench->callback([&] { action = [&] { return run_bench_delay(sizes, sigma, seed, max_steps); }; });

  std::string format = "adjacency";
  auto* export_graph = app.add_subcommand("export-graph", "Write G(P)");
  export_graph->add_option("parikh", ptext)->required();
  export_graph->add_option("--format", format)->check(CLI::IsMember({"adjacency", "edgelist"}));
  export_graph->callback([&] { action = [&] { return run_export(ptext, format, opt); }; });

  auto* swap_graph = app.add_subcommand("swap-graph", "Edge list of the position graph G(w, v)");
  swap_graph->add_option("w", word_a)->required();
  swap_graph->add_option("v", word_b)->required();
  swap_graph->callback([&] { action = [&] { return run_swap_graph(word_a, word_b, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
