#pragma once

#include <vector>

#include "locatable/graph.hpp"

namespace locatable {

/// Distance and choice variance of a vertex set H inside a host graph.
struct VarianceReport {
  VertexSet target;
  /// distance_sets[v] = sorted distinct distances from v to the vertices of H.
  std::vector<std::vector<int>> distance_sets;
  int distance_variance = 0;
  int choice_variance = 0;
  /// Lowest vertex attaining the distance variance.
  int argmax = 0;
};

inline VarianceReport variance(const Graph& g, VertexSet h) {
  if (h.empty()) throw EmptySet();
  if (!g.connected()) throw Disconnected();
  VarianceReport r;
  r.target = h;
  r.distance_sets.resize(g.order());
  r.distance_variance = 0;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet::word_type seen = 0;  // distances fit in 64 bits since n <= 64
    for (int x : h) seen |= VertexSet::word_type{1} << g.distance(v, x);
    r.distance_sets[v] = VertexSet(seen).to_vector();
    int size = static_cast<int>(r.distance_sets[v].size());
    if (size > r.distance_variance) {
      r.distance_variance = size;
      r.argmax = v;
    }
  }
  r.choice_variance = h.size() - r.distance_variance;
  return r;
}

/// ch_G(H) without building the full report.
inline int choice_variance(const Graph& g, VertexSet h) {
  int var = 0;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet::word_type seen = 0;
    for (int x : h) seen |= VertexSet::word_type{1} << g.distance(v, x);
    var = std::max(var, VertexSet(seen).size());
  }
  return h.size() - var;
}

}  // namespace locatable
