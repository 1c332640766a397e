#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace locatable;
using namespace testing_support;

namespace {

void expect_sound(const Graph& g) {
  auto v = classify(g);
  if (v.outcome == Outcome::Unknown) return;
  auto r = solve(g);
  ASSERT_NE(r.verdict, Verdict::Inconclusive);
  ASSERT_EQ(v.outcome == Outcome::Locatable, r.verdict == Verdict::Locatable)
      << to_graph6(g) << " rule " << rule_code(v.rule);
  ASSERT_TRUE(witness_holds(g, v)) << to_graph6(g);
}

}  // namespace

TEST(Variance, Examples) {
  auto c5 = variance(make_named("cycle:5"), VertexSet::range(5));
  EXPECT_EQ(c5.distance_variance, 3);
  EXPECT_EQ(c5.choice_variance, 2);
  auto one = variance(make_named("petersen"), VertexSet{4});
  EXPECT_EQ(one.distance_variance, 1);
  EXPECT_EQ(one.choice_variance, 0);
  auto k = variance(make_named("k33_minus"), VertexSet::range(6));
  EXPECT_EQ(k.distance_variance, 4);
  EXPECT_EQ(k.choice_variance, 2);
  EXPECT_EQ(k.argmax, 0);
  EXPECT_EQ(k.distance_sets[3], (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(choice_variance(make_named("k33_minus"), VertexSet::range(6)), 2);
}

TEST(Variance, Errors) {
  EXPECT_THROW(variance(make_named("cycle:5"), VertexSet{}), EmptySet);
  EXPECT_THROW(variance(Graph(2), VertexSet{0}), Disconnected);
}

TEST(Variance, BoundedByDiameterPlusOne) {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 1000) {
    Graph g = random_connected_graph(2, 12, rng);
    std::uniform_int_distribution<std::uint64_t> bits(1, (std::uint64_t{1} << g.order()) - 1);
    VertexSet h(bits(rng));
    auto r = variance(g, h);
    ASSERT_GE(r.choice_variance, 0);
    ASSERT_GE(r.distance_variance, 1);
    ASSERT_LE(r.distance_variance, h.size());
    Graph sub = g.induced(h);
    if (!sub.connected()) continue;
    ASSERT_LE(r.distance_variance, diameter(sub) + 1) << to_graph6(g) << " " << to_string(h);
    ++checked;
  }
}

TEST(Hideout, DiamondCondition) {
  EXPECT_TRUE(diamond_condition(make_named("diamond_ring:3")));
  EXPECT_FALSE(diamond_condition(make_named("complete:4")));
  EXPECT_TRUE(diamond_condition(make_named("petersen")));
  EXPECT_FALSE(diamond_condition(make_named("diamond")));
}

TEST(Hideout, Check) {
  EXPECT_EQ(hideout_check(make_named("complete:5")), HideoutKind::MinDeg4);
  EXPECT_EQ(hideout_check(make_named("complete_bipartite:4,4")), HideoutKind::MinDeg4);
  EXPECT_EQ(hideout_check(make_named("diamond_ring:4")), HideoutKind::MinDeg3Diamond);
  EXPECT_EQ(hideout_check(make_named("petersen")), HideoutKind::MinDeg3Diamond);
  EXPECT_EQ(hideout_check(make_named("cycle:5")), HideoutKind::None);
  EXPECT_EQ(hideout_check(make_named("complete:4")), HideoutKind::None);
}

TEST(Classify, Examples) {
  auto p = classify(make_named("petersen"));
  EXPECT_EQ(p.outcome, Outcome::NonLocatable);
  EXPECT_EQ(p.rule, Rule::ContainsC5);
  EXPECT_TRUE(witness_holds(make_named("petersen"), p));

  EXPECT_EQ(classify(make_named("complete_bipartite:2,9")).rule, Rule::CompleteBipartite);
  EXPECT_EQ(classify(make_named("complete:4")).rule, Rule::ContainsK4);
  EXPECT_EQ(classify(make_named("k2_join_e3")).rule, Rule::ContainsK2JoinE3);
  EXPECT_EQ(classify(make_named("complete_bipartite:3,3")).rule, Rule::ContainsK33);
  EXPECT_EQ(classify(make_named("sunlet:6")).rule, Rule::InducedSunlet);
  EXPECT_EQ(classify(make_named("diamond_ring:3")).rule, Rule::Hideout);
  EXPECT_EQ(classify(make_named("path:6")).rule, Rule::Tree);
  EXPECT_EQ(classify(make_named("cycle:8")).rule, Rule::Cycle);

  // K1,6 plus a path on three vertices, all joined to the centre.
  std::vector<Edge> edges;
  for (int v = 1; v <= 9; ++v) edges.push_back({0, v});
  edges.push_back({7, 8});
  edges.push_back({8, 9});
  auto star = classify(Graph(10, edges));
  EXPECT_EQ(star.outcome, Outcome::Locatable);
  EXPECT_EQ(star.rule, Rule::UniversalVertex);

  EXPECT_EQ(classify(make_named("pretzel")).outcome, Outcome::Unknown);
  EXPECT_THROW(classify(Graph(2)), Disconnected);
}

// The house is a 5-cycle with one chord. It has diameter 2 and is locatable,
// so a C5 subgraph alone cannot be a non-locatability rule.
TEST(Classify, HouseIsLocatableDespiteC5) {
  Graph house = make_named("house");
  EXPECT_EQ(diameter(house), 2);
  EXPECT_TRUE(contains(house, make_named("cycle:5"), Containment::Subgraph));
  EXPECT_FALSE(contains(house, make_named("cycle:5"), Containment::Induced));
  EXPECT_EQ(solve(house).verdict, Verdict::Locatable);
  EXPECT_TRUE(diameter_two_forbidden(house));
  EXPECT_EQ(classify(house).outcome, Outcome::Unknown);
}

TEST(Classify, K33MinusIsNotANonLocatabilityRule) {
  Graph g = make_named("k33_minus");
  EXPECT_EQ(solve(g).verdict, Verdict::Locatable);
  EXPECT_NE(classify(g).outcome, Outcome::NonLocatable);
}

TEST(Classify, SoundOnAllSmallConnectedGraphs) {
  for (int n = 1; n <= 6; ++n) {
    auto e = enumerate_graphs(n, true);
    while (auto g = e.next()) expect_sound(*g);
  }
}

TEST(Classify, SoundOnRandomGraphs) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) expect_sound(random_connected_graph(2, 10, rng));
}

// Unknown on a diameter-2 graph happens only when a 5-cycle with chords is
// the sole pattern present.
TEST(Classify, DiameterTwoUnknownsHaveOnlyChordedC5) {
  const Graph c5 = make_named("cycle:5");
  for (int n = 1; n <= 6; ++n) {
    auto e = enumerate_graphs(n, true);
    while (auto g = e.next()) {
      if (diameter(*g) != 2) continue;
      auto v = classify(*g);
      if (v.outcome != Outcome::Unknown) continue;
      ASSERT_TRUE(contains(*g, c5, Containment::Subgraph)) << to_graph6(*g);
      ASSERT_FALSE(contains(*g, c5, Containment::Induced)) << to_graph6(*g);
    }
  }
}

TEST(Classify, HideoutSupergraphs) {
  std::mt19937_64 rng(29);
  for (const char* name : {"complete:5", "diamond_ring:3"}) {
    Graph h = make_named(name);
    ASSERT_NE(hideout_check(h), HideoutKind::None);
    for (int i = 0; i < 5; ++i) {
      const int n = h.order() + 1 + static_cast<int>(rng() % 2);
      auto edges = h.edges();
      for (int v = h.order(); v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
      Graph g(n, edges);
      EXPECT_EQ(classify(g).outcome, Outcome::NonLocatable) << to_graph6(g);
      EXPECT_EQ(solve(g).verdict, Verdict::NonLocatable) << to_graph6(g);
    }
  }
}

TEST(Classify, JsonShape) {
  auto j = to_json(classify(make_named("complete:4")));
  EXPECT_EQ(j["outcome"], "NonLocatable");
  EXPECT_EQ(j["rule"], "N1");
  EXPECT_EQ(j["witness"].size(), 4U);
}

TEST(Colourability, Bound) {
  for (int n = 1; n <= 5; ++n) {
    auto e = enumerate_graphs(n, true);
    while (auto g = e.next()) ASSERT_TRUE(colourability_bound_check(*g).ok);
  }
  auto p = colourability_bound_check(make_named("pretzel"));
  EXPECT_TRUE(p.ok);
  EXPECT_EQ(p.verdict, Verdict::Locatable);
  EXPECT_TRUE(p.four_colourable);
  auto k4 = colourability_bound_check(make_named("complete:4"));
  EXPECT_TRUE(k4.ok);
  EXPECT_EQ(k4.verdict, Verdict::NonLocatable);
  SolveOptions tiny;
  tiny.budget = 2;
  EXPECT_THROW(colourability_bound_check(make_named("pretzel"), tiny), BudgetExceeded);
}
