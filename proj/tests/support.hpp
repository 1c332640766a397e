#pragma once

#include <cstdint>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "locatable/locatable.hpp"

namespace testing_support {

using namespace locatable;

/// Plain queue BFS, sharing nothing with the bit-parallel distance matrix.
inline std::vector<int> bfs(const Graph& g, int s) {
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

/// Erdos-Renyi graph, possibly disconnected.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

/// Random connected graph of order in [lo, hi] with a random density.
inline Graph random_connected_graph(int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> order(lo, hi);
  std::uniform_real_distribution<double> density(0.0, 0.5);
  return random_connected(order(rng), density(rng), rng);
}

/// Written from the format description: 6-bit groups offset by 63, order in
/// the first byte, upper triangle column by column.
inline std::vector<Edge> decode_graph6_small(const std::string& s, int& n) {
  n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bits.at(k)) edges.push_back({i, j});
  return edges;
}

/// Exhaustive labelled-subgraph search by trying every injective map.
inline bool brute_contains(const Graph& host, const Graph& pattern, bool induced) {
  std::vector<int> map(pattern.order(), -1);
  std::vector<bool> used(host.order(), false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == pattern.order()) return true;
    for (int v = 0; v < host.order(); ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        bool pe = pattern.adjacent(i, j), he = host.adjacent(v, map[j]);
        ok = induced ? pe == he : (!pe || he);
      }
      if (!ok) continue;
      used[v] = true;
      map[i] = v;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace testing_support
