#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locatable/errors.hpp"
#include "locatable/vertex_set.hpp"

namespace locatable {

struct Edge {
  int u = 0;
  int v = 0;
  constexpr bool operator==(const Edge&) const = default;
  constexpr auto operator<=>(const Edge&) const = default;
};

/// All-pairs shortest path lengths. Unreachable pairs hold the sentinel inf() == n.
class DistMatrix {
 public:
  DistMatrix() = default;
  explicit DistMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, static_cast<std::uint8_t>(n)) {}

  int order() const { return n_; }
  int inf() const { return n_; }
  int at(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  void set(int u, int v, int d) { dist_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::uint8_t>(d); }

  /// Largest finite distance from v.
  int eccentricity(int v) const {
    int e = 0;
    for (int u = 0; u < n_; ++u)
      if (at(v, u) != inf()) e = std::max(e, at(v, u));
    return e;
  }

  /// Vertices at exactly distance d from v.
  VertexSet sphere(int v, int d) const {
    VertexSet s;
    for (int u = 0; u < n_; ++u)
      if (at(v, u) == d) s.insert(u);
    return s;
  }

  bool operator==(const DistMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> dist_;
};

/// Simple undirected graph on vertices 0..n-1, n <= 64. Immutable once built;
/// the distance matrix is computed at construction.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() : Graph(1) {}
  explicit Graph(int n) : Graph(n, std::span<const Edge>{}) {}
  Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 1 || n > kMaxOrder)
      throw InvalidParameter("vertex count " + std::to_string(n) + " outside 1..64");
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw InvalidParameter("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
      if (u == v) throw InvalidParameter("loop at vertex " + std::to_string(u));
      if (adj_[u].contains(v))
        throw InvalidParameter("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      adj_[u].insert(v);
      adj_[v].insert(u);
      ++m_;
    }
    compute_distances();
  }
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
  Graph(int n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  int order() const { return n_; }
  int edge_count() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighbors(int v) const { return adj_[v] | VertexSet::single(v); }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  const DistMatrix& distances() const { return dist_; }
  int distance(int u, int v) const { return dist_.at(u, v); }

  bool connected() const {
    for (int v = 1; v < n_; ++v)
      if (dist_.at(0, v) == dist_.inf()) return false;
    return true;
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  Graph with_edge(int u, int v) const {
    auto e = edges();
    e.push_back({std::min(u, v), std::max(u, v)});
    return Graph(n_, e);
  }

  Graph without_edge(int u, int v) const {
    auto e = edges();
    std::erase(e, Edge{std::min(u, v), std::max(u, v)});
    return Graph(n_, e);
  }

  /// Subgraph induced by s, relabelled in increasing vertex order. If
  /// `original` is given it receives new-index -> old-index.
  Graph induced(VertexSet s, std::vector<int>* original = nullptr) const {
    std::vector<int> old = s.to_vector();
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < old.size(); ++i) index[old[i]] = static_cast<int>(i);
    std::vector<Edge> e;
    for (auto [u, v] : edges())
      if (index[u] >= 0 && index[v] >= 0) e.push_back({index[u], index[v]});
    if (original) *original = old;
    return Graph(static_cast<int>(old.size()), e);
  }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && std::equal(adj_, adj_ + n_, o.adj_);
  }

 private:
  void compute_distances();

  int n_ = 0;
  int m_ = 0;
  VertexSet adj_[kMaxOrder] = {};
  DistMatrix dist_;
};

/// BFS distances over bit-parallel frontiers.
inline DistMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  DistMatrix dm(n);
  for (int s = 0; s < n; ++s) {
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    for (int d = 0; !frontier.empty(); ++d) {
      for (int v : frontier) dm.set(s, v, d);
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - seen;
      seen |= frontier;
    }
  }
  return dm;
}

inline void Graph::compute_distances() { dist_ = distance_matrix(*this); }

/// N[s] = s together with every neighbour of s.
inline VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out = s;
  for (int v : s) out |= g.neighbors(v);
  return out;
}

struct GraphStats {
  int order = 0;
  int edges = 0;
  bool connected = false;
  /// Largest finite distance; only meaningful when connected.
  int diameter = 0;
  int min_degree = 0;
  int max_degree = 0;
  /// Non-increasing.
  std::vector<int> degree_sequence;
};

inline GraphStats graph_stats(const Graph& g) {
  GraphStats st;
  st.order = g.order();
  st.edges = g.edge_count();
  st.connected = g.connected();
  for (int v = 0; v < g.order(); ++v) {
    st.degree_sequence.push_back(g.degree(v));
    st.diameter = std::max(st.diameter, g.distances().eccentricity(v));
  }
  std::ranges::sort(st.degree_sequence, std::greater<>());
  st.max_degree = st.degree_sequence.front();
  st.min_degree = st.degree_sequence.back();
  return st;
}

inline int diameter(const Graph& g) { return graph_stats(g).diameter; }

inline bool is_tree(const Graph& g) { return g.connected() && g.edge_count() == g.order() - 1; }

inline bool is_cycle(const Graph& g) {
  if (!g.connected() || g.order() < 3 || g.edge_count() != g.order()) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

/// Vertex set of the k-core (largest induced subgraph with minimum degree >= k).
inline VertexSet k_core(const Graph& g, int k) {
  VertexSet alive = g.vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : alive)
      if ((g.neighbors(v) & alive).size() < k) {
        alive.erase(v);
        changed = true;
      }
  }
  return alive;
}

}  // namespace locatable
