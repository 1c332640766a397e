#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "locatable/graph.hpp"

// Canonical labelings. Certificates refer to these indices, so they are frozen.
//
//   path:k                 0-1-...-(k-1)
//   cycle:n                0-1-...-(n-1)-0
//   complete:n             0..n-1
//   complete_bipartite:a,b parts {0..a-1} and {a..a+b-1}
//   star:m                 centre 0, leaves 1..m
//   k2_join_e3             edge 0-1; independent 2,3,4 joined to both
//   k33_minus              K3,3 on {0,1,2} x {3,4,5} without 0-3 (a = 0, b = 3)
//   double_net             triangle a=0, b=1, c=2; leaves 3,4 on a, 5,6 on b, 7,8 on c
//   rooted_double_net      double_net plus root 9 joined to the leaves 3,4 of a
//   sunlet:n               cycle 0..n-1, leaf n+i pending on i
//   sunlet_chorded:n       sunlet:n plus the edge between leaves n and n+1
//   diamond                girdle 0,1 (adjacent), tips 2,3
//   kite                   diamond plus leaf 4 on tip 2
//   dart                   diamond plus leaf 4 on girdle 0
//   double_dart            dart with girdle edge 0-1 subdivided by 5
//   bull                   triangle 0,1,2; leaves 3 on 0, 4 on 1
//   watch                  4-cycle 0-1-2-3; leaves 4 on 0, 5 on 2
//   house                  4-cycle 0-1-2-3; roof 4 joined to 0 and 1
//   diamond_ring:n         tips 0..n-1; diamond i has girdles n+2i, n+2i+1
//                          joined to tips i and (i+1) mod n
//   petersen               outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5)
//   pretzel                50 vertices in blocks (see pretzel_edges); the
//                          unique degree-7 vertex c is 20

namespace locatable {

enum class NamedGraph {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  Star,
  K2JoinE3,
  K33Minus,
  DoubleNet,
  RootedDoubleNet,
  Sunlet,
  SunletChorded,
  Diamond,
  Kite,
  Dart,
  DoubleDart,
  Bull,
  Watch,
  House,
  DiamondRing,
  Pretzel,
  Petersen,
};

struct NamedGraphSpec {
  NamedGraph name = NamedGraph::Complete;
  std::vector<int> params;
  bool operator==(const NamedGraphSpec&) const = default;
};

struct NamedGraphInfo {
  NamedGraph name;
  std::string_view key;
  int arity;
};

inline constexpr std::array<NamedGraphInfo, 21> kNamedGraphs{{
    {NamedGraph::Path, "path", 1},
    {NamedGraph::Cycle, "cycle", 1},
    {NamedGraph::Complete, "complete", 1},
    {NamedGraph::CompleteBipartite, "complete_bipartite", 2},
    {NamedGraph::Star, "star", 1},
    {NamedGraph::K2JoinE3, "k2_join_e3", 0},
    {NamedGraph::K33Minus, "k33_minus", 0},
    {NamedGraph::DoubleNet, "double_net", 0},
    {NamedGraph::RootedDoubleNet, "rooted_double_net", 0},
    {NamedGraph::Sunlet, "sunlet", 1},
    {NamedGraph::SunletChorded, "sunlet_chorded", 1},
    {NamedGraph::Diamond, "diamond", 0},
    {NamedGraph::Kite, "kite", 0},
    {NamedGraph::Dart, "dart", 0},
    {NamedGraph::DoubleDart, "double_dart", 0},
    {NamedGraph::Bull, "bull", 0},
    {NamedGraph::Watch, "watch", 0},
    {NamedGraph::House, "house", 0},
    {NamedGraph::DiamondRing, "diamond_ring", 1},
    {NamedGraph::Pretzel, "pretzel", 0},
    {NamedGraph::Petersen, "petersen", 0},
}};

inline const NamedGraphInfo& info(NamedGraph name) {
  for (const auto& i : kNamedGraphs)
    if (i.name == name) return i;
  throw InvalidParameter("unknown named graph");
}

/// Parses "name" or "name:p1[,p2]", e.g. "sunlet:6", "complete_bipartite:2,7".
inline NamedGraphSpec parse_named_spec(std::string_view text) {
  auto colon = text.find(':');
  std::string_view key = text.substr(0, colon);
  const NamedGraphInfo* found = nullptr;
  for (const auto& i : kNamedGraphs)
    if (i.key == key) found = &i;
  if (!found) throw InvalidParameter("unknown graph name '" + std::string(key) + "'");
  NamedGraphSpec spec{found->name, {}};
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string tok(rest.substr(0, comma));
      try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        spec.params.push_back(value);
      } catch (const std::logic_error&) {
        throw InvalidParameter("bad parameter '" + tok + "' in '" + std::string(text) + "'");
      }
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  if (static_cast<int>(spec.params.size()) != found->arity)
    throw InvalidParameter("'" + std::string(key) + "' takes " + std::to_string(found->arity) + " parameter(s)");
  return spec;
}

inline std::string to_string(const NamedGraphSpec& spec) {
  std::string out(info(spec.name).key);
  for (std::size_t i = 0; i < spec.params.size(); ++i)
    out += (i == 0 ? ":" : ",") + std::to_string(spec.params[i]);
  return out;
}

/// Edge list of the pretzel graph, block by block. Diamond blocks X have
/// vertices X1..X4 with tips X1, X4; triangle blocks have X1..X3. Base indices:
/// A 0, B 3, C 7, D 10, E 14, F 18, G 22, H 26, I 29, J 32, K 35, L 38, M 41,
/// N 44, O 47. A chain link joins X2 and X3 of one block to Y1 of the next,
/// forming a diamond with tips X1 and Y1.
inline const std::vector<Edge>& pretzel_edges() {
  static const std::vector<Edge> edges{
      // triangle A
      {0, 1}, {0, 2}, {1, 2},
      // diamond B
      {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6},
      // triangle C
      {7, 8}, {7, 9}, {8, 9},
      // diamond D
      {10, 11}, {10, 12}, {11, 12}, {11, 13}, {12, 13},
      // diamond E
      {14, 15}, {14, 16}, {15, 16}, {15, 17}, {16, 17},
      // diamond F
      {18, 19}, {18, 20}, {19, 20}, {19, 21}, {20, 21},
      // diamond G
      {22, 23}, {22, 24}, {23, 24}, {23, 25}, {24, 25},
      // triangles H..O
      {26, 27}, {26, 28}, {27, 28},
      {29, 30}, {29, 31}, {30, 31},
      {32, 33}, {32, 34}, {33, 34},
      {35, 36}, {35, 37}, {36, 37},
      {38, 39}, {38, 40}, {39, 40},
      {41, 42}, {41, 43}, {42, 43},
      {44, 45}, {44, 46}, {45, 46},
      {47, 48}, {47, 49}, {48, 49},
      // chain links A-B, C-D, H-I, I-J, J-K, L-M, M-N, N-O
      {1, 3}, {2, 3}, {8, 10}, {9, 10}, {27, 29}, {28, 29}, {30, 32}, {31, 32},
      {33, 35}, {34, 35}, {39, 41}, {40, 41}, {42, 44}, {43, 44}, {45, 47}, {46, 47},
      // the two outer triangles A1-E1-H1 and D4-G4-L1
      {0, 14}, {0, 26}, {14, 26}, {13, 25}, {13, 38}, {25, 38},
      // B4-C1, E4-F1, F4-G1
      {6, 7}, {17, 18}, {21, 22},
      // K2, K3, O2, O3 onto F3 (= c)
      {20, 36}, {20, 37}, {20, 48}, {20, 49},
  };
  return edges;
}

inline constexpr int kPretzelCentre = 20;

inline Graph make_named(const NamedGraphSpec& spec) {
  const auto& p = spec.params;
  if (static_cast<int>(p.size()) != info(spec.name).arity)
    throw InvalidParameter("wrong parameter count for " + std::string(info(spec.name).key));
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw InvalidParameter(std::string(info(spec.name).key) + ": " + what);
  };
  std::vector<Edge> e;
  switch (spec.name) {
    case NamedGraph::Path: {
      require(p[0] >= 1 && p[0] <= 64, "k must be in 1..64");
      for (int i = 0; i + 1 < p[0]; ++i) e.push_back({i, i + 1});
      return Graph(p[0], e);
    }
    case NamedGraph::Cycle: {
      require(p[0] >= 3 && p[0] <= 64, "n must be in 3..64");
      for (int i = 0; i < p[0]; ++i) e.push_back({std::min(i, (i + 1) % p[0]), std::max(i, (i + 1) % p[0])});
      return Graph(p[0], e);
    }
    case NamedGraph::Complete: {
      require(p[0] >= 1 && p[0] <= 64, "n must be in 1..64");
      for (int u = 0; u < p[0]; ++u)
        for (int v = u + 1; v < p[0]; ++v) e.push_back({u, v});
      return Graph(p[0], e);
    }
    case NamedGraph::CompleteBipartite: {
      require(p[0] >= 1 && p[1] >= 1 && p[0] + p[1] <= 64, "need a,b >= 1 and a+b <= 64");
      for (int u = 0; u < p[0]; ++u)
        for (int v = p[0]; v < p[0] + p[1]; ++v) e.push_back({u, v});
      return Graph(p[0] + p[1], e);
    }
    case NamedGraph::Star: {
      require(p[0] >= 1 && p[0] <= 63, "m must be in 1..63");
      for (int v = 1; v <= p[0]; ++v) e.push_back({0, v});
      return Graph(p[0] + 1, e);
    }
    case NamedGraph::K2JoinE3:
      return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    case NamedGraph::K33Minus:
      return Graph(6, {{0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    case NamedGraph::DoubleNet:
      return Graph(9, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}});
    case NamedGraph::RootedDoubleNet:
      return Graph(10, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}, {3, 9}, {4, 9}});
    case NamedGraph::Sunlet:
    case NamedGraph::SunletChorded: {
      const int n = p[0];
      require(n >= 3 && n <= 32, "n must be in 3..32");
      for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        e.push_back({std::min(i, j), std::max(i, j)});
        e.push_back({i, n + i});
      }
      if (spec.name == NamedGraph::SunletChorded) e.push_back({n, n + 1});
      return Graph(2 * n, e);
    }
    case NamedGraph::Diamond:
      return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    case NamedGraph::Kite:
      return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}});
    case NamedGraph::Dart:
      return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}});
    case NamedGraph::DoubleDart:
      return Graph(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {0, 5}, {1, 5}});
    case NamedGraph::Bull:
      return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    case NamedGraph::Watch:
      return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {2, 5}});
    case NamedGraph::House:
      return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}});
    case NamedGraph::DiamondRing: {
      const int n = p[0];
      require(n >= 3 && n <= 21, "n must be in 3..21");
      for (int i = 0; i < n; ++i) {
        int g1 = n + 2 * i, g2 = g1 + 1, t1 = i, t2 = (i + 1) % n;
        e.push_back({g1, g2});
        for (int t : {t1, t2}) {
          e.push_back({t, g1});
          e.push_back({t, g2});
        }
      }
      return Graph(3 * n, e);
    }
    case NamedGraph::Pretzel:
      return Graph(50, pretzel_edges());
    case NamedGraph::Petersen: {
      for (int i = 0; i < 5; ++i) {
        e.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
        e.push_back({i, i + 5});
        int a = 5 + i, b = 5 + (i + 2) % 5;
        e.push_back({std::min(a, b), std::max(a, b)});
      }
      return Graph(10, e);
    }
  }
  throw InvalidParameter("unknown named graph");
}

inline Graph make_named(std::string_view text) { return make_named(parse_named_spec(text)); }

inline constexpr int kDefaultCubicRetries = 100'000;

/// Simple 3-regular graph from the pairing model, rejecting loops and
/// multi-edges. Deterministic per seed. Not necessarily connected.
inline Graph random_cubic(int n, std::uint64_t seed, int max_retries = kDefaultCubicRetries) {
  if (n < 4 || n % 2 != 0 || n > Graph::kMaxOrder)
    throw InvalidParameter("random_cubic needs even n in 4..64");
  std::mt19937_64 rng(seed);
  std::vector<int> points(3 * n);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<VertexSet> adj(n);
    std::vector<Edge> edges;
    bool ok = true;
    for (int i = 0; i < 3 * n && ok; i += 2) {
      int u = points[i], v = points[i + 1];
      if (u == v || adj[u].contains(v)) {
        ok = false;
        break;
      }
      adj[u].insert(v);
      adj[v].insert(u);
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
    if (ok) {
      std::ranges::sort(edges);
      return Graph(n, edges);
    }
  }
  throw RejectionLimit("random_cubic: no simple pairing after " + std::to_string(max_retries) + " attempts");
}

/// Uniform random labelled tree (Prüfer sequence).
template <class Rng>
Graph random_tree(int n, Rng& rng) {
  if (n < 1 || n > Graph::kMaxOrder) throw InvalidParameter("tree order must be in 1..64");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({std::min(leaf, c), std::max(leaf, c)});
    --degree[leaf];
    --degree[c];
  }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.push_back({u, v});
        break;
      }
    }
  return Graph(n, edges);
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability p.
template <class Rng>
Graph random_connected(int n, double p, Rng& rng) {
  Graph tree = random_tree(n, rng);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (tree.adjacent(u, v) || coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

/// Maximum order accepted by enumerate_graphs without the large flag.
inline constexpr int kEnumerateDefaultMax = 6;

/// Every labelled simple graph on n vertices, one per edge mask. Bit k of the
/// mask is the k-th pair in the order (0,1), (0,2), (1,2), (0,3), ...
class GraphEnumeration {
 public:
  GraphEnumeration(int n, bool connected_only, bool allow_large = false)
      : n_(n), connected_only_(connected_only) {
    if (n < 1) throw InvalidParameter("n must be positive");
    const int limit = allow_large ? 7 : kEnumerateDefaultMax;
    if (n > limit) throw TooLarge("enumeration limited to n <= " + std::to_string(limit));
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) pairs_.push_back({u, v});
    end_ = std::uint64_t{1} << pairs_.size();
  }

  /// Next graph in mask order, or nullopt when exhausted.
  std::optional<Graph> next() {
    while (mask_ < end_) {
      Graph g = from_mask(mask_++);
      if (!connected_only_ || g.connected()) return g;
    }
    return std::nullopt;
  }

  Graph from_mask(std::uint64_t mask) const {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs_.size(); ++k)
      if ((mask >> k) & 1U) edges.push_back(pairs_[k]);
    std::ranges::sort(edges);
    return Graph(n_, edges);
  }

  std::uint64_t mask_count() const { return end_; }

 private:
  int n_;
  bool connected_only_;
  std::vector<Edge> pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_ = 0;
};

inline GraphEnumeration enumerate_graphs(int n, bool connected_only, bool allow_large = false) {
  return GraphEnumeration(n, connected_only, allow_large);
}

}  // namespace locatable
