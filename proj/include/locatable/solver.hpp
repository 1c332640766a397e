#pragma once

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "locatable/graph.hpp"
#include "locatable/strategy.hpp"
#include "locatable/variance.hpp"

namespace locatable {

/// One probe answer: the vertices consistent with it, and where the robber
/// may be after his move (never onto the probed vertex).
struct ProbeOutcome {
  int probe = 0;
  int distance = 0;
  VertexSet consistent;
  VertexSet successor;

  bool located() const { return consistent.size() == 1; }
  bool operator==(const ProbeOutcome&) const = default;
};

/// nullopt if no vertex of `belief` is at distance d from p.
inline std::optional<ProbeOutcome> belief_update(const Graph& g, VertexSet belief, int p, int d) {
  VertexSet c = belief & g.distances().sphere(p, d);
  if (c.empty()) return std::nullopt;
  return ProbeOutcome{p, d, c, closed_neighborhood(g, c) - VertexSet::single(p)};
}

/// Distances the robber can truthfully answer to a probe at p, ascending.
inline std::vector<int> response_distances(const Graph& g, VertexSet belief, int p) {
  VertexSet::word_type seen = 0;
  for (int v : belief) seen |= VertexSet::word_type{1} << std::min(g.distance(p, v), 63);
  return VertexSet(seen).to_vector();
}

enum class Verdict { Locatable, NonLocatable, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Locatable: return "Locatable";
    case Verdict::NonLocatable: return "NonLocatable";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

/// Node budget from LOCATABLE_BUDGET if set and valid, else kDefaultBudget.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("LOCATABLE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

struct SolveOptions {
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
  /// Drop a robber branch whose successor is contained in the successor of
  /// another branch of the same probe. Preserves verdict and capture time.
  bool subset_pruning = false;
};

/// Result of solve(). Labels: capture time t >= 0 for cop-won beliefs,
/// kRobberWin for the rest.
class SolveResult {
 public:
  static constexpr int kRobberWin = -1;

  Verdict verdict = Verdict::Inconclusive;
  std::optional<int> capture_time;
  std::size_t explored = 0;
  bool budget_exhausted = false;
  bool pruned = false;

  const std::vector<VertexSet>& beliefs() const { return beliefs_; }
  const std::vector<int>& times() const { return times_; }

  /// Label of a reached belief; nullopt if it was never reached.
  std::optional<int> label(VertexSet belief) const {
    auto it = index_.find(belief.bits());
    if (it == index_.end()) return std::nullopt;
    return times_[it->second];
  }
  bool cop_win(VertexSet belief) const {
    auto t = label(belief);
    return t && *t >= 0;
  }
  bool robber_win(VertexSet belief) const {
    auto t = label(belief);
    return t && *t == kRobberWin;
  }

  /// Same verdict, capture time, explored count and labels.
  bool same_as(const SolveResult& o) const {
    return verdict == o.verdict && capture_time == o.capture_time && explored == o.explored &&
           beliefs_ == o.beliefs_ && times_ == o.times_;
  }

 private:
  friend class Solver;
  std::vector<VertexSet> beliefs_;
  std::vector<int> times_;
  absl::flat_hash_map<std::uint64_t, std::uint32_t> index_;
};

/// Exact solver for the locating game. Beliefs are expanded breadth-first
/// from V(G); labels are then computed as layered attractor sets: a belief
/// gets time k when some probe sends every unlocated branch to a belief of
/// time < k. What remains unlabelled is a robber win.
class Solver {
 public:
  Solver(const Graph& g, SolveOptions options) : g_(g), opt_(options) {
    if (!g.connected()) throw Disconnected();
    const int n = g.order();
    closed_.resize(n);
    spheres_.resize(n);
    for (int v = 0; v < n; ++v) {
      closed_[v] = g.closed_neighbors(v);
      int ecc = g.distances().eccentricity(v);
      for (int d = 0; d <= ecc; ++d) spheres_[v].push_back(g.distances().sphere(v, d));
    }
    opt_.jobs = std::max(1, opt_.jobs);
  }

  SolveResult run() {
    SolveResult r;
    const VertexSet all = g_.vertices();
    insert(r, all);
    if (g_.order() == 1) {
      r.times_[0] = 0;
      r.verdict = Verdict::Locatable;
      r.capture_time = 0;
      r.explored = 1;
      return r;
    }
    expand(r);
    label(r);
    r.explored = r.beliefs_.size();
    r.pruned = opt_.subset_pruning;
    const int root = r.times_[0];
    if (!r.budget_exhausted) {
      r.verdict = root >= 0 ? Verdict::Locatable : Verdict::NonLocatable;
      if (root >= 0) r.capture_time = root;
    } else if (root >= 0 && root <= complete_depth_) {
      // Every belief within `root` probes of the start was expanded, so the
      // optimal strategy lies inside the explored part and the time is exact.
      r.verdict = Verdict::Locatable;
      r.capture_time = root;
    } else {
      r.verdict = Verdict::Inconclusive;
    }
    return r;
  }

 private:
  /// Successors of `belief` under probe p, in ascending distance order.
  /// Located branches are omitted.
  void branches(VertexSet belief, int p, std::vector<VertexSet>& out) const {
    out.clear();
    for (VertexSet sphere : spheres_[p]) {
      VertexSet c = belief & sphere;
      if (c.size() < 2) continue;
      VertexSet m;
      for (int v : c) m |= closed_[v];
      m.erase(p);
      out.push_back(m);
    }
    if (opt_.subset_pruning && out.size() > 1) {
      std::vector<VertexSet> kept;
      for (std::size_t i = 0; i < out.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < out.size() && !dominated; ++j) {
          if (i == j || !out[i].subset_of(out[j])) continue;
          // Equal successors: keep the first occurrence only.
          dominated = out[i] != out[j] || j < i;
        }
        if (!dominated) kept.push_back(out[i]);
      }
      out.swap(kept);
    }
  }

  bool insert(SolveResult& r, VertexSet b) {
    auto [it, fresh] = r.index_.try_emplace(b.bits(), static_cast<std::uint32_t>(r.beliefs_.size()));
    if (fresh) {
      r.beliefs_.push_back(b);
      r.times_.push_back(SolveResult::kRobberWin);
    }
    return fresh;
  }

  void successors_of(VertexSet belief, std::vector<VertexSet>& out) const {
    std::vector<VertexSet> tmp;
    out.clear();
    for (int p = 0; p < g_.order(); ++p) {
      branches(belief, p, tmp);
      out.insert(out.end(), tmp.begin(), tmp.end());
    }
  }

  void expand(SolveResult& r) {
    std::size_t level_end = 1;
    int depth = 0;
    std::size_t next = 0;
    constexpr std::size_t kChunk = 1 << 14;
    std::vector<std::vector<VertexSet>> produced;
    while (next < r.beliefs_.size()) {
      if (next == level_end) {
        ++depth;
        level_end = r.beliefs_.size();
      }
      // Successors are computed for a chunk (in parallel if asked) and merged
      // in belief order, so the insertion order never depends on jobs.
      const std::size_t stop = std::min(level_end, next + kChunk);
      produced.assign(stop - next, {});
      compute_chunk(r, next, stop, produced);
      for (std::size_t i = next; i < stop; ++i) {
        const std::size_t before = r.beliefs_.size();
        bool over = false;
        for (VertexSet m : produced[i - next]) {
          if (!insert(r, m)) continue;
          if (r.beliefs_.size() > opt_.budget) {
            over = true;
            break;
          }
        }
        if (over) {
          // Roll back the partial expansion of belief i; it stays unexpanded.
          for (std::size_t k = before; k < r.beliefs_.size(); ++k) r.index_.erase(r.beliefs_[k].bits());
          r.beliefs_.resize(before);
          r.times_.resize(before);
          r.budget_exhausted = true;
          expanded_ = i;
          complete_depth_ = depth;
          return;
        }
      }
      next = stop;
    }
    expanded_ = r.beliefs_.size();
  }

  void compute_chunk(const SolveResult& r, std::size_t begin, std::size_t end,
                     std::vector<std::vector<VertexSet>>& produced) const {
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) successors_of(r.beliefs_[i], produced[i - begin]);
    };
    const std::size_t count = end - begin;
    const int jobs = static_cast<int>(std::min<std::size_t>(opt_.jobs, count));
    if (jobs <= 1) {
      work(begin, end);
      return;
    }
    std::vector<std::thread> pool;
    const std::size_t per = (count + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      std::size_t lo = begin + j * per, hi = std::min(end, lo + per);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  /// True if some probe sends every unlocated branch of belief to a belief
  /// labelled strictly before round k.
  bool wins_by(const SolveResult& r, VertexSet belief, int k) const {
    std::vector<VertexSet> out;
    for (int p = 0; p < g_.order(); ++p) {
      branches(belief, p, out);
      bool ok = true;
      for (VertexSet m : out) {
        auto it = r.index_.find(m.bits());
        int t = it == r.index_.end() ? SolveResult::kRobberWin : r.times_[it->second];
        if (t < 0 || t >= k) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }

  void label(SolveResult& r) {
    std::vector<std::uint32_t> open;
    for (std::size_t i = 0; i < expanded_; ++i)
      if (r.beliefs_[i].size() >= 2) open.push_back(static_cast<std::uint32_t>(i));
    std::vector<char> wins;
    for (int k = 1; !open.empty(); ++k) {
      // Round k reads only labels < k, so the order of evaluation is free.
      wins.assign(open.size(), 0);
      auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) wins[i] = wins_by(r, r.beliefs_[open[i]], k);
      };
      const int jobs = static_cast<int>(std::min<std::size_t>(opt_.jobs, open.size()));
      if (jobs <= 1) {
        work(0, open.size());
      } else {
        std::vector<std::thread> pool;
        const std::size_t per = (open.size() + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
          std::size_t lo = j * per, hi = std::min(open.size(), lo + per);
          if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& t : pool) t.join();
      }
      std::vector<std::uint32_t> still;
      bool any = false;
      for (std::size_t i = 0; i < open.size(); ++i) {
        if (wins[i]) {
          r.times_[open[i]] = k;
          any = true;
        } else {
          still.push_back(open[i]);
        }
      }
      open.swap(still);
      if (!any) break;
    }
  }

  const Graph& g_;
  SolveOptions opt_;
  std::vector<VertexSet> closed_;
  std::vector<std::vector<VertexSet>> spheres_;
  std::size_t expanded_ = 0;
  int complete_depth_ = 0;
};

/// Decides whether g is locatable. Throws Disconnected.
inline SolveResult solve(const Graph& g, SolveOptions options = {}) { return Solver(g, options).run(); }

inline SolveResult solve(const Graph& g, std::uint64_t budget) {
  SolveOptions o;
  o.budget = budget;
  return solve(g, o);
}

/// Plain-text report: verdict, capture time, explored beliefs.
inline std::string report(const SolveResult& r) {
  std::string out = to_string(r.verdict);
  if (r.capture_time) out += ", capture_time = " + std::to_string(*r.capture_time);
  out += "\nexplored = " + std::to_string(r.explored) + "\n";
  if (r.budget_exhausted) out += "budget exhausted\n";
  return out;
}

namespace detail {

inline int probe_value(const Graph& g, const SolveResult& r, VertexSet belief, int p) {
  int worst = 0;
  for (int d : response_distances(g, belief, p)) {
    auto o = belief_update(g, belief, p, d);
    if (o->located()) {
      worst = std::max(worst, 1);
      continue;
    }
    auto t = r.label(o->successor);
    if (!t) continue;  // dropped by subset pruning; dominated by a sibling
    if (*t < 0) return SolveResult::kRobberWin;
    worst = std::max(worst, 1 + *t);
  }
  return worst;
}

/// Builds the subtree for `actual`, following the strategy of the labelled
/// cop-won superset `guide`.
inline int build_node(const Graph& g, const SolveResult& r, VertexSet actual, VertexSet guide,
                      CopStrategyTree& tree) {
  const int guide_time = *r.label(guide);
  int probe = -1;
  for (int p = 0; p < g.order() && probe < 0; ++p)
    if (probe_value(g, r, guide, p) == guide_time) probe = p;
  const int id = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back({actual, probe, {}});
  for (int d : response_distances(g, actual, probe)) {
    auto o = belief_update(g, actual, probe, d);
    if (o->located()) {
      tree.nodes[id].children.push_back({d, CopStrategyTree::kLeaf});
      continue;
    }
    // The guide's branch at the same distance contains this one.
    VertexSet next_guide = belief_update(g, guide, probe, d)->successor;
    if (!r.label(next_guide)) {
      // Pruned: a sibling branch of the same probe dominates it.
      for (int e : response_distances(g, guide, probe)) {
        auto sibling = belief_update(g, guide, probe, e);
        if (!sibling->located() && next_guide.subset_of(sibling->successor) && r.cop_win(sibling->successor)) {
          next_guide = sibling->successor;
          break;
        }
      }
    }
    int child = build_node(g, r, o->successor, next_guide, tree);
    tree.nodes[id].children.push_back({d, child});
  }
  return id;
}

}  // namespace detail

/// Optimal probing plan from full uncertainty. Each node probes the lowest
/// vertex attaining the belief's capture time.
inline CopStrategyTree extract_cop_strategy(const Graph& g, const SolveResult& r) {
  if (r.verdict != Verdict::Locatable) throw WrongVerdict("graph was not solved as locatable");
  CopStrategyTree tree;
  if (g.order() == 1) return tree;
  detail::build_node(g, r, g.vertices(), g.vertices(), tree);
  return tree;
}

/// Every reached robber-won belief, in discovery order.
inline RobberCertificate extract_robber_certificate(const SolveResult& r) {
  if (r.verdict != Verdict::NonLocatable) throw WrongVerdict("graph was not solved as non-locatable");
  RobberCertificate cert;
  for (std::size_t i = 0; i < r.beliefs().size(); ++i)
    if (r.times()[i] == SolveResult::kRobberWin) cert.family.push_back(r.beliefs()[i]);
  return cert;
}

/// The distance an evading robber answers to a probe at p: the least one
/// staying robber-won in `solved` if there is one, otherwise the one keeping
/// the most candidates, then the largest choice variance, ties to least d.
inline int adversarial_response(const Graph& g, VertexSet belief, int p, const SolveResult* solved = nullptr) {
  auto ds = response_distances(g, belief, p);
  if (solved)
    for (int d : ds) {
      auto o = belief_update(g, belief, p, d);
      if (!o->located() && solved->robber_win(o->successor)) return d;
    }
  int best = ds.front();
  int best_size = -1, best_choice = 0;
  for (int d : ds) {
    auto o = belief_update(g, belief, p, d);
    int size = o->located() ? 0 : o->consistent.size();
    int choice = o->located() ? -1 : choice_variance(g, o->successor);
    if (size > best_size || (size == best_size && choice > best_choice)) {
      best = d;
      best_size = size;
      best_choice = choice;
    }
  }
  return best;
}

}  // namespace locatable
