#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locatable/colouring.hpp"
#include "locatable/generators.hpp"
#include "locatable/graph.hpp"
#include "locatable/solver.hpp"
#include "locatable/subgraph.hpp"
#include "locatable/variance.hpp"

namespace locatable {

/// True iff in every diamond subgraph of h both girdle vertices, or both tip
/// vertices, have degree at least 4 in h. Vacuous without diamonds.
inline bool diamond_condition(const Graph& h) {
  static const Graph diamond = make_named({NamedGraph::Diamond, {}});
  bool ok = true;
  for_each_embedding(h, diamond, Containment::Subgraph, [&](const Embedding& e) {
    // canonical diamond: girdle 0,1; tips 2,3
    bool girdles = h.degree(e.map[0]) >= 4 && h.degree(e.map[1]) >= 4;
    bool tips = h.degree(e.map[2]) >= 4 && h.degree(e.map[3]) >= 4;
    ok = girdles || tips;
    return ok;
  });
  return ok;
}

enum class HideoutKind { None, MinDeg4, MinDeg3Diamond };

inline const char* to_string(HideoutKind k) {
  switch (k) {
    case HideoutKind::None: return "None";
    case HideoutKind::MinDeg4: return "MinDeg4";
    case HideoutKind::MinDeg3Diamond: return "MinDeg3Diamond";
  }
  return "?";
}

/// Minimum-degree sufficient conditions for h to be a hideout graph.
inline HideoutKind hideout_check(const Graph& h) {
  int min_degree = h.order();
  for (int v = 0; v < h.order(); ++v) min_degree = std::min(min_degree, h.degree(v));
  if (min_degree >= 4) return HideoutKind::MinDeg4;
  if (min_degree >= 3 && diamond_condition(h)) return HideoutKind::MinDeg3Diamond;
  return HideoutKind::None;
}

enum class Outcome { NonLocatable, Locatable, Unknown };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::NonLocatable: return "NonLocatable";
    case Outcome::Locatable: return "Locatable";
    case Outcome::Unknown: return "Unknown";
  }
  return "?";
}

/// Rules in the order they are tried.
enum class Rule {
  ContainsK4,         // N1
  ContainsC5,         // N2, induced
  ContainsK2JoinE3,   // N3
  ContainsK33,        // N4
  InducedSunlet,      // N5
  Hideout,            // N6
  Tree,               // L1
  Cycle,              // L2
  CompleteBipartite,  // L3
  UniversalVertex,    // L4
  DiameterTwo,        // L5
  None,
};

inline const char* rule_code(Rule r) {
  constexpr const char* codes[] = {"N1", "N2", "N3", "N4", "N5", "N6", "L1", "L2", "L3", "L4", "L5", "none"};
  return codes[static_cast<int>(r)];
}

inline const char* rule_description(Rule r) {
  constexpr const char* text[] = {
      "contains K4",
      "contains an induced C5",
      "contains K2+E3",
      "contains K3,3",
      "contains an induced sunlet Su_n, 5 <= n <= 8",
      "subgraph passes hideout_check",
      "tree",
      "cycle of length >= 4 other than C5",
      "K_{1,m} or K_{2,m}",
      "universal vertex, no C5, K4 or K2+E3",
      "diameter <= 2, no C5, K4, K2+E3 or K3,3",
      "no rule applies",
  };
  return text[static_cast<int>(r)];
}

struct ClassifierVerdict {
  Outcome outcome = Outcome::Unknown;
  Rule rule = Rule::None;
  /// For NonLocatable: the forbidden pattern (for N6, the hideout subgraph
  /// itself) and its embedding into the classified graph.
  std::optional<Graph> pattern;
  std::optional<Embedding> witness;
  HideoutKind hideout = HideoutKind::None;
};

/// Largest sunlet searched as an induced subgraph.
inline constexpr int kMaxSunletCycle = 8;

namespace detail {

inline const Graph& pattern_graph(Rule r) {
  static const Graph k4 = make_named({NamedGraph::Complete, {4}});
  static const Graph c5 = make_named({NamedGraph::Cycle, {5}});
  static const Graph k2e3 = make_named({NamedGraph::K2JoinE3, {}});
  static const Graph k33 = make_named({NamedGraph::CompleteBipartite, {3, 3}});
  switch (r) {
    case Rule::ContainsK4: return k4;
    case Rule::ContainsC5: return c5;
    case Rule::ContainsK2JoinE3: return k2e3;
    default: return k33;
  }
}

inline Containment rule_mode(Rule r) {
  return r == Rule::ContainsC5 || r == Rule::InducedSunlet ? Containment::Induced : Containment::Subgraph;
}

/// Part sizes if g is complete bipartite.
inline std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g) {
  if (!g.connected() || g.order() < 2) return std::nullopt;
  VertexSet side;
  for (int v = 0; v < g.order(); ++v)
    if (g.distance(0, v) % 2 == 0) side.insert(v);
  const int a = side.size(), b = g.order() - a;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet other = side.contains(v) ? g.vertices() - side : side;
    if (g.neighbors(v) != other) return std::nullopt;
  }
  return std::pair{std::min(a, b), std::max(a, b)};
}

}  // namespace detail

/// Structural verdict from known locatability results, first matching rule
/// wins. Sound but incomplete: Unknown is always a possible answer.
inline ClassifierVerdict classify(const Graph& g) {
  if (!g.connected()) throw Disconnected();
  ClassifierVerdict v;

  // A C5 with chords is not enough (the house graph is locatable), so N2
  // needs an induced one. K2+E3 and K3,3 plus any chord contain K4 or K2+E3.
  std::optional<Embedding> found[4];
  const Rule forbidden[4] = {Rule::ContainsK4, Rule::ContainsC5, Rule::ContainsK2JoinE3, Rule::ContainsK33};
  for (int i = 0; i < 4; ++i) {
    found[i] = contains(g, detail::pattern_graph(forbidden[i]), detail::rule_mode(forbidden[i]));
    if (found[i]) {
      v.outcome = Outcome::NonLocatable;
      v.rule = forbidden[i];
      v.pattern = detail::pattern_graph(forbidden[i]);
      v.witness = found[i];
      return v;
    }
  }

  for (int n = 5; n <= kMaxSunletCycle && 2 * n <= g.order(); ++n) {
    Graph sunlet = make_named({NamedGraph::Sunlet, {n}});
    if (auto e = contains(g, sunlet, Containment::Induced, 2 * kMaxSunletCycle)) {
      v.outcome = Outcome::NonLocatable;
      v.rule = Rule::InducedSunlet;
      v.pattern = sunlet;
      v.witness = e;
      return v;
    }
  }

  for (VertexSet candidate : {g.vertices(), k_core(g, 3), k_core(g, 4)}) {
    if (candidate.empty()) continue;
    std::vector<int> original;
    Graph h = g.induced(candidate, &original);
    if (auto kind = hideout_check(h); kind != HideoutKind::None) {
      v.outcome = Outcome::NonLocatable;
      v.rule = Rule::Hideout;
      v.pattern = h;
      v.witness = Embedding{original};
      v.hideout = kind;
      return v;
    }
  }

  auto locatable = [&](Rule r) {
    v.outcome = Outcome::Locatable;
    v.rule = r;
    return v;
  };
  if (is_tree(g)) return locatable(Rule::Tree);
  if (is_cycle(g) && g.order() >= 4 && g.order() != 5) return locatable(Rule::Cycle);
  if (auto parts = detail::complete_bipartite_parts(g); parts && parts->first <= 2)
    return locatable(Rule::CompleteBipartite);

  const bool c5_subgraph = contains(g, detail::pattern_graph(Rule::ContainsC5), Containment::Subgraph).has_value();
  const bool no_small = !found[0] && !c5_subgraph && !found[2];
  const auto stats = graph_stats(g);
  if (stats.max_degree == g.order() - 1 && no_small) return locatable(Rule::UniversalVertex);
  if (stats.diameter <= 2 && no_small && !found[3]) return locatable(Rule::DiameterTwo);
  return v;
}

/// Forbidden-subgraph test for diameter-2 graphs: C5, K4, K2+E3 or K3,3 as a
/// subgraph. It overshoots: the house graph passes it and is locatable.
inline bool diameter_two_forbidden(const Graph& g) {
  for (Rule r : {Rule::ContainsK4, Rule::ContainsC5, Rule::ContainsK2JoinE3, Rule::ContainsK33})
    if (contains(g, detail::pattern_graph(r), Containment::Subgraph)) return true;
  return false;
}

/// Re-checks a NonLocatable verdict's witness without trusting the classifier.
inline bool witness_holds(const Graph& g, const ClassifierVerdict& v) {
  if (v.outcome != Outcome::NonLocatable) return true;
  if (!v.pattern || !v.witness) return false;
  if (!is_embedding(g, *v.pattern, *v.witness, detail::rule_mode(v.rule))) return false;
  if (v.rule == Rule::Hideout) return hideout_check(*v.pattern) != HideoutKind::None;
  return true;
}

struct ColourabilityCheck {
  bool ok = true;
  Verdict verdict = Verdict::Inconclusive;
  bool four_colourable = true;
};

/// Differential check: a locatable graph must be 4-colourable. Throws
/// BudgetExceeded when the solver cannot decide the graph.
inline ColourabilityCheck colourability_bound_check(const Graph& g, SolveOptions options = {}) {
  ColourabilityCheck c;
  auto r = solve(g, options);
  if (r.verdict == Verdict::Inconclusive) throw BudgetExceeded("solver budget exhausted");
  c.verdict = r.verdict;
  c.four_colourable = k_colourable(g, 4).has_value();
  c.ok = !(r.verdict == Verdict::Locatable && !c.four_colourable);
  return c;
}

}  // namespace locatable
