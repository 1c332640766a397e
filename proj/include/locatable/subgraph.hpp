#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "locatable/graph.hpp"

namespace locatable {

enum class Containment { Subgraph, Induced };

/// Injective map pattern vertex -> host vertex.
struct Embedding {
  std::vector<int> map;

  VertexSet image() const {
    VertexSet s;
    for (int v : map) s.insert(v);
    return s;
  }
  bool operator==(const Embedding&) const = default;
};

/// Default pattern size limit for `contains`.
inline constexpr int kMaxPatternOrder = 10;

/// Checks the embedding invariants directly, without search.
inline bool is_embedding(const Graph& host, const Graph& pattern, const Embedding& e, Containment mode) {
  if (static_cast<int>(e.map.size()) != pattern.order()) return false;
  VertexSet seen;
  for (int h : e.map) {
    if (h < 0 || h >= host.order() || seen.contains(h)) return false;
    seen.insert(h);
  }
  for (int a = 0; a < pattern.order(); ++a)
    for (int b = a + 1; b < pattern.order(); ++b) {
      bool pe = pattern.adjacent(a, b);
      bool he = host.adjacent(e.map[a], e.map[b]);
      if (pe && !he) return false;
      if (mode == Containment::Induced && !pe && he) return false;
    }
  return true;
}

namespace detail {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& host, const Graph& pattern, Containment mode)
      : host_(host), pattern_(pattern), mode_(mode) {
    const int k = pattern.order();
    // Connectivity-first order: next vertex has the most already-placed
    // neighbours, ties to higher degree.
    VertexSet placed;
    for (int step = 0; step < k; ++step) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int v = 0; v < k; ++v) {
        if (placed.contains(v)) continue;
        int links = (pattern.neighbors(v) & placed).size();
        int deg = pattern.degree(v);
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = v;
          best_links = links;
          best_deg = deg;
        }
      }
      order_.push_back(best);
      placed.insert(best);
    }
    map_.assign(k, -1);
  }

  /// Calls visit for every embedding until it returns false.
  /// Returns false if stopped early.
  bool run(const std::function<bool(const Embedding&)>& visit) {
    visit_ = &visit;
    if (pattern_.order() > host_.order()) return true;
    return extend(0, VertexSet{});
  }

 private:
  bool extend(std::size_t depth, VertexSet used) {
    if (depth == order_.size()) return (*visit_)(Embedding{map_});
    const int pv = order_[depth];
    VertexSet cand = host_.vertices() - used;
    for (std::size_t j = 0; j < depth; ++j) {
      int q = order_[j];
      if (pattern_.adjacent(pv, q))
        cand &= host_.neighbors(map_[q]);
      else if (mode_ == Containment::Induced)
        cand -= host_.neighbors(map_[q]);
    }
    const int need = pattern_.degree(pv);
    for (int h : cand) {
      if (host_.degree(h) < need) continue;
      map_[pv] = h;
      if (!extend(depth + 1, used | VertexSet::single(h))) return false;
    }
    map_[pv] = -1;
    return true;
  }

  const Graph& host_;
  const Graph& pattern_;
  Containment mode_;
  std::vector<int> order_;
  std::vector<int> map_;
  const std::function<bool(const Embedding&)>* visit_ = nullptr;
};

}  // namespace detail

/// Enumerates all embeddings of pattern into host (no size limit; the caller
/// owns the cost). Stops when visit returns false.
inline void for_each_embedding(const Graph& host, const Graph& pattern, Containment mode,
                               const std::function<bool(const Embedding&)>& visit) {
  detail::EmbeddingSearch(host, pattern, mode).run(visit);
}

/// First embedding found by backtracking, or nullopt. Throws PatternTooLarge
/// when the pattern has more than `max_pattern_order` vertices.
inline std::optional<Embedding> contains(const Graph& host, const Graph& pattern, Containment mode,
                                         int max_pattern_order = kMaxPatternOrder) {
  if (pattern.order() > max_pattern_order)
    throw PatternTooLarge("pattern has " + std::to_string(pattern.order()) + " vertices; limit is " +
                          std::to_string(max_pattern_order));
  std::optional<Embedding> found;
  for_each_embedding(host, pattern, mode, [&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

}  // namespace locatable
