#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "locatable/locatable.hpp"

namespace locatable::cli {

inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitDisagreement = 3;

/// Per-sample solver budget for cubic-experiment unless --budget or
/// LOCATABLE_BUDGET says otherwise; 50-vertex cubic graphs never finish anyway.
inline constexpr std::uint64_t kCubicExperimentBudget = 100'000;

struct Options {
  std::string named, file, format = "edge-list";
  std::uint64_t budget = 0;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string emit, certificate, output;
  bool cross_check = false, large = false, solved = false, prune = false, skip_solver = false;
  int max_order = kEnumerateDefaultMax;
  int samples = 200;
  int cubic_order = 50;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidParameter("cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

inline GraphFormat parse_format(const std::string& name) {
  if (name == "edge-list") return GraphFormat::EdgeList;
  if (name == "graph6") return GraphFormat::Graph6;
  throw InvalidParameter("unknown format '" + name + "'");
}

inline Graph load_graph(const Options& o, std::istream& in) {
  if (o.named.empty() == o.file.empty()) throw InvalidParameter("give exactly one of --named or --file");
  if (!o.named.empty()) return make_named(o.named);
  std::string text;
  if (o.file == "-") {
    std::ostringstream s;
    s << in.rdbuf();
    text = s.str();
  } else {
    text = read_file(o.file);
  }
  return parse_graph(text, parse_format(o.format));
}

inline SolveOptions solve_options(const Options& o, std::uint64_t fallback) {
  SolveOptions s;
  s.budget = o.budget ? o.budget : std::getenv("LOCATABLE_BUDGET") ? default_budget() : fallback;
  s.jobs = o.jobs;
  s.subset_pruning = o.prune;
  return s;
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidParameter("cannot write '" + path + "'");
  f << text;
}

inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline std::string one_line(const Graph& g) {
  std::string s;
  for (auto [u, v] : g.edges()) s += (s.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

inline int cmd_solve(const Options& o, std::istream& in, std::ostream& out) {
  Graph g = load_graph(o, in);
  auto r = solve(g, solve_options(o, kDefaultBudget));
  out << report(r);
  if (!o.emit.empty()) {
    json cert;
    if (r.verdict == Verdict::Locatable) cert = to_json(extract_cop_strategy(g, r));
    if (r.verdict == Verdict::NonLocatable) cert = to_json(extract_robber_certificate(r));
    if (cert.is_null()) {
      out << "no certificate for an inconclusive run\n";
    } else {
      write_text(o.emit, cert.dump(2) + "\n");
      out << "certificate written to " << o.emit << "\n";
    }
  }
  return r.verdict == Verdict::Inconclusive ? kExitInconclusive : 0;
}

inline int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  Graph g = load_graph(o, in);
  auto v = classify(g);
  json j = to_json(v);
  int code = 0;
  if (o.cross_check) {
    auto r = solve(g, solve_options(o, kDefaultBudget));
    j["solver"] = to_json(r);
    if (v.outcome == Outcome::Unknown || r.verdict == Verdict::Inconclusive) {
      j["agree"] = nullptr;
    } else {
      bool agree = (v.outcome == Outcome::Locatable) == (r.verdict == Verdict::Locatable);
      j["agree"] = agree;
      if (!agree) code = kExitDisagreement;
    }
    if (r.verdict == Verdict::Inconclusive) code = kExitInconclusive;
  }
  out << j.dump(2) << "\n";
  return code;
}

inline int cmd_certify(const Options& o, std::istream& in, std::ostream& out) {
  Graph g = load_graph(o, in);
  json j = json::parse(read_file(o.certificate));
  const std::string type = j.value("type", "");
  if (type == "cop") {
    auto v = verify_cop_strategy(g, cop_strategy_from_json(j));
    if (v.valid) {
      out << "Valid, depth = " << v.depth << "\n";
      return 0;
    }
    out << "Invalid: " << v.reason << "\npath = [" << join(v.path) << "]\n";
    return kExitError;
  }
  if (type == "robber") {
    auto c = robber_certificate_from_json(j);
    auto v = verify_robber_certificate(g, c);
    if (v.valid) {
      out << "Valid, family size = " << c.family.size() << "\n";
      return 0;
    }
    out << "Invalid: member " << v.member << " " << to_string(relabelled_family(g, c)[v.member]) << ": " << v.reason
        << "\n";
    return kExitError;
  }
  throw ParseError(0, "certificate type must be \"cop\" or \"robber\"");
}

inline int cmd_generate(const Options& o, std::istream& in, std::ostream& out) {
  Graph g = load_graph(o, in);
  std::string text = parse_format(o.format) == GraphFormat::Graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
  if (o.output.empty()) {
    out << text;
  } else {
    write_text(o.output, text);
  }
  return 0;
}

inline int cmd_chromatic(const Options& o, std::istream& in, std::ostream& out) {
  Graph g = load_graph(o, in);
  const int k = chromatic_number(g);
  out << "chromatic_number = " << k << "\ncolouring = " << join(*k_colourable(g, k)) << "\n";
  return 0;
}

inline int cmd_enumerate_check(const Options& o, std::ostream& out) {
  std::uint64_t total = 0, counterexamples = 0;
  std::vector<std::string> shown;
  for (int n = 1; n <= o.max_order; ++n) {
    auto e = enumerate_graphs(n, true, o.large);
    std::uint64_t connected = 0, diameter_two = 0, non_locatable = 0, unknown = 0, bad = 0;
    while (auto g = e.next()) {
      ++connected;
      if (diameter(*g) != 2) continue;
      ++diameter_two;
      auto r = solve(*g);
      const bool solver_nl = r.verdict == Verdict::NonLocatable;
      non_locatable += solver_nl;
      const bool predicate_nl = diameter_two_forbidden(*g);
      auto v = classify(*g);
      if (v.outcome == Outcome::Unknown) ++unknown;
      const bool classifier_bad = v.outcome != Outcome::Unknown && (v.outcome == Outcome::NonLocatable) != solver_nl;
      if (predicate_nl != solver_nl || classifier_bad || r.verdict == Verdict::Inconclusive) {
        ++bad;
        if (shown.size() < 5)
          shown.push_back(to_graph6(*g) + " [" + one_line(*g) + "] solver " + to_string(r.verdict) +
                          ", forbidden subgraph " + (predicate_nl ? "present" : "absent") + ", classifier " +
                          to_string(v.outcome) + " (" + rule_code(v.rule) + ")");
      }
    }
    out << "n = " << n << ": masks " << e.mask_count() << ", connected " << connected << ", diameter 2 "
        << diameter_two << ", non-locatable " << non_locatable << ", classifier unknown " << unknown
        << ", counterexamples " << bad << "\n";
    total += diameter_two;
    counterexamples += bad;
  }
  for (const auto& s : shown) out << "counterexample: " << s << "\n";
  if (counterexamples == 0) {
    out << "agree on all diameter-2 graphs; 0 counterexamples\n";
    return 0;
  }
  out << "disagreement on " << counterexamples << " of " << total << " diameter-2 graphs; " << counterexamples
      << " counterexamples\n";
  return kExitDisagreement;
}

inline int cmd_cubic_experiment(const Options& o, std::ostream& out) {
  static const Graph diamond = make_named({NamedGraph::Diamond, {}});
  int connected = 0, diamond_free = 0, hideout_fired = 0;
  std::map<std::string, int> rules, verdicts;
  for (int i = 0; i < o.samples; ++i) {
    Graph g = random_cubic(o.cubic_order, o.seed + static_cast<std::uint64_t>(i));
    if (!g.connected()) continue;
    ++connected;
    if (!contains(g, diamond, Containment::Subgraph)) {
      ++diamond_free;
      hideout_fired += hideout_check(g) != HideoutKind::None;
    }
    auto v = classify(g);
    ++rules[std::string(to_string(v.outcome)) + " (" + rule_code(v.rule) + ")"];
    if (!o.skip_solver) ++verdicts[to_string(solve(g, solve_options(o, kCubicExperimentBudget)).verdict)];
  }
  out << "samples = " << o.samples << ", n = " << o.cubic_order << ", connected = " << connected << "\n";
  out << "diamond-free = " << diamond_free << " (fraction "
      << (connected ? static_cast<double>(diamond_free) / connected : 0.0) << ")\n";
  out << "hideout_check fired on " << hideout_fired << " of " << diamond_free << " diamond-free samples\n";
  for (const auto& [k, c] : rules) out << "classifier " << k << ": " << c << "\n";
  for (const auto& [k, c] : verdicts) out << "solver " << k << ": " << c << "\n";
  return 0;
}

inline int cmd_play(const Options& o, std::istream& in, std::ostream& out) {
  Graph g = load_graph(o, in);
  std::optional<SolveResult> solved;
  if (o.solved) {
    solved = solve(g, solve_options(o, kDefaultBudget));
    if (solved->verdict == Verdict::Inconclusive) {
      out << "budget exhausted, the robber plays greedily\n";
      solved.reset();
    } else {
      out << "robber plays exactly: " << to_string(solved->verdict) << "\n";
    }
  }
  VertexSet belief = g.vertices();
  out << "robber hides on one of " << g.order() << " vertices; enter a probe vertex or 'quit'\n";
  int probes = 0;
  std::string line;
  while (true) {
    out << "probe> " << std::flush;
    if (!std::getline(in, line)) break;
    std::string_view t = locatable::detail::trim(line);
    if (t.empty()) continue;
    if (t == "quit" || t == "q") break;
    int p = -1;
    try {
      std::size_t used = 0;
      p = std::stoi(std::string(t), &used);
      if (used != t.size()) p = -1;
    } catch (const std::logic_error&) {
    }
    if (p < 0 || p >= g.order()) {
      out << "not a vertex: " << t << "\n";
      continue;
    }
    ++probes;
    const int d = adversarial_response(g, belief, p, solved ? &*solved : nullptr);
    auto step = *belief_update(g, belief, p, d);
    out << "distance " << d << ", consistent " << to_string(step.consistent) << "\n";
    if (step.located()) {
      out << "LOCATED at " << step.consistent.first() << " after " << probes << " probes\n";
      return 0;
    }
    belief = step.successor;
    out << "belief " << to_string(belief) << "\n";
  }
  out << "quit after " << probes << " probes\n";
  return 0;
}

}  // namespace detail

/// Runs one subcommand. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robber-locating game: solver, classifier and certificates", "locatable"};
  app.require_subcommand(1);
  Options o;

  auto graph_input = [&](CLI::App* sub) {
    sub->add_option("--named", o.named, "named graph, e.g. sunlet:6 or complete_bipartite:2,7");
    sub->add_option("--file", o.file, "graph file, '-' for standard input");
    sub->add_option("--format", o.format, "edge-list or graph6")->check(CLI::IsMember({"edge-list", "graph6"}));
  };
  auto solver_flags = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "belief budget (default LOCATABLE_BUDGET or 5000000)");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* solve_cmd = app.add_subcommand("solve", "decide locatability");
  graph_input(solve_cmd);
  solver_flags(solve_cmd);
  solve_cmd->add_option("--emit-certificate", o.emit, "write the cop tree or robber family as JSON");
  solve_cmd->add_flag("--prune", o.prune, "subset pruning of robber branches");

  auto* classify_cmd = app.add_subcommand("classify", "structural verdict");
  graph_input(classify_cmd);
  solver_flags(classify_cmd);
  classify_cmd->add_flag("--cross-check", o.cross_check, "also run the solver");

  auto* certify_cmd = app.add_subcommand("certify", "verify a certificate");
  graph_input(certify_cmd);
  certify_cmd->add_option("--certificate", o.certificate, "certificate JSON")->required();

  auto* generate_cmd = app.add_subcommand("generate", "print a graph");
  graph_input(generate_cmd);
  generate_cmd->add_option("--output", o.output, "write here instead of standard output");

  auto* chromatic_cmd = app.add_subcommand("chromatic", "chromatic number and a colouring");
  graph_input(chromatic_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate-check", "exhaustive diameter-2 check");
  enumerate_cmd->add_option("-n", o.max_order, "largest order")->check(CLI::Range(1, 7));
  enumerate_cmd->add_flag("--large", o.large, "allow n = 7");

  auto* cubic_cmd = app.add_subcommand("cubic-experiment", "random cubic graphs");
  cubic_cmd->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  cubic_cmd->add_option("-n", o.cubic_order, "order, even");
  cubic_cmd->add_option("--seed", o.seed);
  cubic_cmd->add_option("--budget", o.budget, "per-sample belief budget");
  cubic_cmd->add_flag("--skip-solver", o.skip_solver);

  auto* play_cmd = app.add_subcommand("play", "probe against the engine");
  graph_input(play_cmd);
  solver_flags(play_cmd);
  play_cmd->add_flag("--solved", o.solved, "exact robber play when the graph fits the budget");

  std::vector<const char*> argv{"locatable"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*solve_cmd) return detail::cmd_solve(o, in, out);
    if (*classify_cmd) return detail::cmd_classify(o, in, out);
    if (*certify_cmd) return detail::cmd_certify(o, in, out);
    if (*generate_cmd) return detail::cmd_generate(o, in, out);
    if (*chromatic_cmd) return detail::cmd_chromatic(o, in, out);
    if (*enumerate_cmd) return detail::cmd_enumerate_check(o, out);
    if (*cubic_cmd) return detail::cmd_cubic_experiment(o, out);
    if (*play_cmd) return detail::cmd_play(o, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace locatable::cli
