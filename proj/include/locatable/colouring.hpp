#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "locatable/graph.hpp"

namespace locatable {

/// colour[v] in 0..k-1.
using Colouring = std::vector<int>;

inline constexpr std::uint64_t kDefaultColouringBudget = 50'000'000;

inline bool is_proper_colouring(const Graph& g, const Colouring& c) {
  if (static_cast<int>(c.size()) != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  for (int x : c)
    if (x < 0) return false;
  return true;
}

namespace detail {

/// Exact k-colouring by DSATUR-ordered backtracking. Colours are introduced in
/// order (a vertex may only open colour max_used+1), which removes colour
/// permutation symmetry and pins the first vertex to colour 0.
class ColouringSearch {
 public:
  ColouringSearch(const Graph& g, int k, std::uint64_t budget)
      : g_(g), k_(k), budget_(budget), colour_(g.order(), -1),
        blocked_(static_cast<std::size_t>(g.order()) * k, 0) {}

  std::optional<Colouring> run() {
    if (search(0, -1)) return colour_;
    return std::nullopt;
  }

 private:
  int saturation(int v) const {
    int s = 0;
    for (int c = 0; c < k_; ++c) s += blocked(v, c) > 0;
    return s;
  }
  int& blocked(int v, int c) { return blocked_[static_cast<std::size_t>(v) * k_ + c]; }
  int blocked(int v, int c) const { return blocked_[static_cast<std::size_t>(v) * k_ + c]; }

  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (colour_[v] >= 0) continue;
      int sat = saturation(v);
      int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool search(int coloured, int max_used) {
    if (coloured == g_.order()) return true;
    if (++nodes_ > budget_) throw BudgetExceeded("colouring search exceeded node budget");
    const int v = pick();
    const int limit = std::min(k_ - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (blocked(v, c) > 0) continue;
      colour_[v] = c;
      for (int u : g_.neighbors(v)) ++blocked(u, c);
      if (search(coloured + 1, std::max(max_used, c))) return true;
      for (int u : g_.neighbors(v)) --blocked(u, c);
      colour_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Colouring colour_;
  std::vector<int> blocked_;
};

}  // namespace detail

/// A proper colouring with at most k colours, or nullopt if none exists.
/// Throws BudgetExceeded if the search visits more than `budget` nodes.
inline std::optional<Colouring> k_colourable(const Graph& g, int k,
                                             std::uint64_t budget = kDefaultColouringBudget) {
  if (k < 1) throw InvalidParameter("k must be at least 1");
  return detail::ColouringSearch(g, k, budget).run();
}

inline int chromatic_number(const Graph& g, std::uint64_t budget = kDefaultColouringBudget) {
  for (int k = 1;; ++k)
    if (k_colourable(g, k, budget)) return k;
}

}  // namespace locatable
