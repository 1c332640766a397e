#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace locatable;
using namespace testing_support;

namespace {

Graph parse_edge_list(std::string_view text) { return parse_graph(text, GraphFormat::EdgeList); }
Graph parse_graph6(std::string_view text) { return parse_graph(text, GraphFormat::Graph6); }

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet s{1, 3, 63};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(63));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.first(), 1);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{1, 3, 63}));
  EXPECT_EQ(to_string(s), "{1,3,63}");
  EXPECT_TRUE(VertexSet({1, 3}).subset_of(s));
  EXPECT_EQ(VertexSet::range(64).size(), 64);
  EXPECT_EQ(s - VertexSet{3}, (VertexSet{1, 63}));
}

TEST(Parse, EdgeListTriangle) {
  Graph g = parse_edge_list("3\n0 1\n1 2\n0 2");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g, make_named("complete:3"));
}

TEST(Parse, SingleVertex) {
  Graph g = parse_edge_list("1\n");
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(Parse, CommentsBlankLinesAndReversedPairs) {
  Graph g = parse_edge_list("# a path\n\n3\n  1 0  # first\n2 1\n");
  EXPECT_EQ(g, make_named("path:3"));
}

TEST(Parse, ErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("3\n0 1\n0 3\n"), 3);  // out of range
  EXPECT_EQ(line_of("3\n0 0\n"), 2);       // loop
  EXPECT_EQ(line_of("3\n0 1\n1 0\n"), 3);  // duplicate
  EXPECT_EQ(line_of("3\n0 x\n"), 2);
  EXPECT_EQ(line_of("65\n"), 1);
  EXPECT_EQ(line_of("0\n"), 1);
  EXPECT_THROW(parse_edge_list(""), ParseError);
}

TEST(Graph6, KnownString) {
  int n = 0;
  auto edges = decode_graph6_small("D~{", n);
  Graph g = parse_graph6("D~{");
  EXPECT_EQ(g, Graph(n, edges));
  EXPECT_EQ(g.order(), 5);
}

// Encodings from networkx.to_graph6_bytes on the canonical labelings.
TEST(Graph6, FrozenEncodings) {
  const std::pair<const char*, const char*> cases[] = {
      {"cycle:5", "Dhc"},          {"complete:4", "C~"},          {"k33_minus", "EBz_"},
      {"k2_join_e3", "D}o"},       {"double_net", "H{`A@?_"},     {"rooted_double_net", "I{`A@?_E?"},
      {"petersen", "IheA@GUAo"},   {"diamond_ring:3", "HEtbLA`"}, {"house", "Dlo"},
      {"sunlet:6", "KhEKA?_C?O?_"}};
  for (auto [name, g6] : cases) {
    EXPECT_EQ(to_graph6(make_named(name)), g6) << name;
    EXPECT_EQ(parse_graph6(g6), make_named(name)) << name;
  }
}

TEST(Graph6, CrossDecodeAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    auto e = enumerate_graphs(n, false);
    while (auto g = e.next()) {
      std::string s = to_graph6(*g);
      int m = 0;
      auto edges = decode_graph6_small(s, m);
      ASSERT_EQ(Graph(m, edges), *g) << s;
      ASSERT_EQ(parse_graph6(s), *g) << s;
    }
  }
}

TEST(Graph6, LargeRoundTripAndErrors) {
  Graph p = make_named("pretzel");
  EXPECT_EQ(parse_graph6(to_graph6(p)), p);
  EXPECT_EQ(parse_graph6(">>graph6<<" + to_graph6(p)), p);
  EXPECT_THROW(parse_graph6("D~"), ParseError);
  EXPECT_THROW(parse_graph6(""), ParseError);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidParameter);
  EXPECT_THROW(Graph(3, {{1, 1}}), InvalidParameter);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidParameter);
  EXPECT_THROW(Graph(0), InvalidParameter);
  EXPECT_THROW(Graph(65), InvalidParameter);
}

TEST(Distances, Examples) {
  Graph c5 = make_named("cycle:5");
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v) EXPECT_LE(c5.distance(u, v), 2);
  Graph k = make_named("k33_minus");
  EXPECT_EQ(k.distance(0, 3), 3);
  int far = 0;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) far += k.distance(u, v) == 3;
  EXPECT_EQ(far, 1);
  Graph p = make_named("pretzel");
  EXPECT_EQ(p.distances().eccentricity(kPretzelCentre), 9);
}

TEST(Distances, MatchBfsOnRandomGraphs) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> order(1, 16);
  std::uniform_real_distribution<double> density(0.0, 0.6);
  for (int trial = 0; trial < 1000; ++trial) {
    Graph g = random_graph(order(rng), density(rng), rng);
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
      auto ref = bfs(g, u);
      ASSERT_EQ(g.distance(u, u), 0);
      for (int v = 0; v < n; ++v) {
        ASSERT_EQ(g.distance(u, v), ref[v] < 0 ? n : ref[v]);
        ASSERT_EQ(g.distance(u, v), g.distance(v, u));
        ASSERT_EQ(g.distance(u, v) == 1, g.adjacent(u, v));
        if (ref[v] < 0) continue;
        for (int w = 0; w < n; ++w)
          if (ref[w] >= 0) ASSERT_LE(g.distance(u, w), g.distance(u, v) + g.distance(v, w));
      }
    }
  }
}

TEST(Neighbourhood, Examples) {
  Graph k4 = make_named("complete:4");
  EXPECT_EQ(closed_neighborhood(k4, VertexSet{}), VertexSet{});
  EXPECT_EQ(closed_neighborhood(k4, VertexSet{0}), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(closed_neighborhood(make_named("cycle:4"), VertexSet{1, 3}), (VertexSet{0, 1, 2, 3}));
}

TEST(Stats, Examples) {
  auto dn = graph_stats(make_named("double_net"));
  EXPECT_TRUE(dn.connected);
  EXPECT_EQ(dn.order, 9);
  EXPECT_EQ(dn.min_degree, 1);
  EXPECT_EQ(dn.max_degree, 4);
  EXPECT_EQ(dn.degree_sequence, (std::vector<int>{4, 4, 4, 1, 1, 1, 1, 1, 1}));
  auto k = graph_stats(make_named("k2_join_e3"));
  EXPECT_EQ(k.diameter, 2);
  EXPECT_EQ(k.degree_sequence, (std::vector<int>{4, 4, 2, 2, 2}));
  EXPECT_EQ(diameter(Graph(1)), 0);
  EXPECT_FALSE(Graph(2).connected());
}

TEST(Stats, TreesCyclesCores) {
  EXPECT_TRUE(is_tree(make_named("star:4")));
  EXPECT_FALSE(is_tree(make_named("cycle:4")));
  EXPECT_TRUE(is_cycle(make_named("cycle:7")));
  EXPECT_FALSE(is_cycle(make_named("path:7")));
  EXPECT_EQ(k_core(make_named("sunlet:5"), 2), VertexSet::range(5));
  EXPECT_TRUE(k_core(make_named("sunlet:5"), 3).empty());
  EXPECT_EQ(k_core(make_named("complete:5"), 4), VertexSet::range(5));
}

TEST(Subgraph, Examples) {
  EXPECT_TRUE(contains(make_named("complete:4"), make_named("diamond"), Containment::Subgraph));
  EXPECT_FALSE(contains(make_named("complete:4"), make_named("diamond"), Containment::Induced));
  EXPECT_FALSE(contains(make_named("complete_bipartite:3,3"), make_named("k2_join_e3"), Containment::Subgraph));
  auto e = contains(make_named("petersen"), make_named("cycle:5"), Containment::Subgraph);
  ASSERT_TRUE(e);
  EXPECT_TRUE(is_embedding(make_named("petersen"), make_named("cycle:5"), *e, Containment::Subgraph));
  EXPECT_THROW(contains(make_named("pretzel"), make_named("sunlet:6"), Containment::Subgraph), PatternTooLarge);
}

TEST(Subgraph, AgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> host_order(1, 7), pattern_order(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    Graph h = random_graph(host_order(rng), 0.5, rng);
    Graph p = random_graph(pattern_order(rng), 0.5, rng);
    for (auto mode : {Containment::Subgraph, Containment::Induced}) {
      auto e = contains(h, p, mode);
      ASSERT_EQ(e.has_value(), brute_contains(h, p, mode == Containment::Induced));
      if (e) ASSERT_TRUE(is_embedding(h, p, *e, mode));
    }
  }
}

TEST(Subgraph, InducedImpliesSubgraphAndReflexive) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    Graph h = random_graph(8, 0.4, rng);
    Graph p = random_graph(4, 0.5, rng);
    if (contains(h, p, Containment::Induced)) ASSERT_TRUE(contains(h, p, Containment::Subgraph));
    ASSERT_TRUE(contains(h, h, Containment::Induced, 8));
  }
}

TEST(Colouring, Examples) {
  Graph k4 = make_named("complete:4");
  EXPECT_FALSE(k_colourable(k4, 3));
  EXPECT_TRUE(k_colourable(k4, 4));
  EXPECT_EQ(chromatic_number(make_named("cycle:5")), 3);
  EXPECT_EQ(chromatic_number(make_named("complete_bipartite:2,7")), 2);
  EXPECT_EQ(chromatic_number(make_named("petersen")), 3);
  EXPECT_THROW(k_colourable(k4, 0), InvalidParameter);
}

TEST(Colouring, Pretzel) {
  Graph p = make_named("pretzel");
  EXPECT_FALSE(k_colourable(p, 3));
  auto c = k_colourable(p, 4);
  ASSERT_TRUE(c);
  EXPECT_TRUE(is_proper_colouring(p, *c));
  EXPECT_EQ(chromatic_number(p), 4);
}

TEST(Colouring, BoundsOnRandomGraphs) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(1 + trial % 12, 0.45, rng);
    const int chi = chromatic_number(g);
    auto c = k_colourable(g, chi);
    ASSERT_TRUE(c);
    // independent properness check
    for (auto [u, v] : g.edges()) ASSERT_NE((*c)[u], (*c)[v]);
    if (chi > 1) ASSERT_FALSE(k_colourable(g, chi - 1));
    // greedy clique from below, greedy colouring from above
    VertexSet clique;
    for (int v = 0; v < g.order(); ++v)
      if ((g.neighbors(v) & clique) == clique) clique.insert(v);
    ASSERT_GE(chi, clique.size());
    std::vector<int> greedy(g.order(), -1);
    int used = 0;
    for (int v = 0; v < g.order(); ++v) {
      int colour = 0;
      auto taken = [&](int c) {
        for (int u : g.neighbors(v))
          if (greedy[u] == c) return true;
        return false;
      };
      while (taken(colour)) ++colour;
      greedy[v] = colour;
      used = std::max(used, colour + 1);
    }
    ASSERT_LE(chi, used);
  }
}
