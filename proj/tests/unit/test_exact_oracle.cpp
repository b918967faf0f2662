#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tfed/errors.hpp"
#include "tfed/oracle.hpp"
#include "tfed/structure.hpp"

using namespace tfed;
using tfed::testing::Rng;

TEST(ExactOracle, Examples) {
  EXPECT_EQ(opt_partition(Graph::complete(5), 1).cost, 10);
  const auto k3 = opt_partition(Graph::complete(3), 2);
  EXPECT_EQ(k3.cost, 2);
  EXPECT_EQ(k3.partition.parts.size(), 2u);
  EXPECT_EQ(opt_partition(Graph::path(4), 2).cost, 1);
  EXPECT_EQ(opt_partition(Graph::cycle(6), 6).cost, 0);
  EXPECT_EQ(opt_partition(Graph::cycle(6), 9).cost, 0);
}

TEST(ExactOracle, DecideExamples) {
  EXPECT_FALSE(decide(Graph::complete(3), 1, 2).yes);
  const auto yes = decide(Graph::complete(3), 2, 2);
  ASSERT_TRUE(yes.yes);
  ASSERT_TRUE(yes.certificate.has_value());
  EXPECT_EQ(yes.certificate->deleted_edges.size(), 2u);
  const EdgeSet e{{0, 1}, {2, 3}};
  const auto fits = decide(Graph(4, e), 0, 2);
  ASSERT_TRUE(fits.yes);
  EXPECT_TRUE(fits.certificate->deleted_edges.empty());
}

TEST(ExactOracle, MatchingExamples) {
  EXPECT_EQ(maximum_matching(Graph::complete(4)).size(), 2u);
  EXPECT_EQ(maximum_matching(Graph::star(3)).size(), 1u);
  EXPECT_TRUE(maximum_matching(Graph(0)).empty());
  EXPECT_EQ(opt_h2(Graph::complete(4)), 4);
  EXPECT_EQ(opt_h2(Graph::path(4)), 1);
  EXPECT_EQ(opt_h2(Graph::path(2)), 0);
}

TEST(ExactOracle, RejectsLargeInputs) {
  EXPECT_THROW(opt_partition(Graph::path(30), 2), CapExceeded);
}

TEST(ExactOracle, AgreesWithEdgeSubsetBruteForce) {
  Rng rng(11);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = tfed::testing::uniform(rng, 1, 7);
    const Graph g = tfed::testing::random_graph(rng, n, 0.5);
    if (g.edge_count() > 16) continue;
    const auto costs = tfed::testing::brute_force_costs(g);
    for (int h = 1; h <= n; ++h) {
      const PartitionSolution s = opt_partition(g, h);
      EXPECT_EQ(s.cost, costs[h]);
      EXPECT_TRUE(is_valid_solution(g, h, s));
    }
  }
}

TEST(ExactOracle, CostIsMonotoneInH) {
  Rng rng(12);
  for (int iter = 0; iter < 60; ++iter) {
    const Graph g = tfed::testing::random_graph(rng, tfed::testing::uniform(rng, 2, 10), 0.4);
    long long prev = g.edge_count();
    for (int h = 1; h <= g.vertex_count(); ++h) {
      const long long c = opt_partition(g, h).cost;
      EXPECT_LE(c, prev);
      prev = c;
    }
  }
}

TEST(ExactOracle, MatchingMatchesBruteForce) {
  Rng rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    const Graph g = tfed::testing::random_graph(rng, tfed::testing::uniform(rng, 0, 8), 0.4);
    if (g.edge_count() > 18) continue;
    const EdgeSet m = maximum_matching(g);
    EXPECT_EQ(static_cast<int>(m.size()), tfed::testing::brute_force_matching_size(g));
    std::vector<int> used(g.vertex_count(), 0);
    for (const Edge& e : m) {
      EXPECT_TRUE(g.adjacent(e.u, e.v));
      EXPECT_EQ(used[e.u]++, 0);
      EXPECT_EQ(used[e.v]++, 0);
    }
  }
}

TEST(ExactOracle, H2CrossCheck) {
  Rng rng(14);
  for (int iter = 0; iter < 100; ++iter) {
    const Graph g = tfed::testing::random_graph(rng, tfed::testing::uniform(rng, 1, 10), 0.35);
    EXPECT_EQ(opt_h2(g), opt_partition(g, 2).cost);
  }
}

TEST(ExactOracle, EdgeRemovalChangesOptimumByAtMostOne) {
  Rng rng(15);
  for (int iter = 0; iter < 40; ++iter) {
    const Graph g = tfed::testing::random_graph(rng, tfed::testing::uniform(rng, 2, 8), 0.45);
    for (int h = 1; h <= g.vertex_count(); ++h) {
      const long long base = opt_partition(g, h).cost;
      for (const Edge& e : g.edges()) {
        const long long without = opt_partition(g.without_edges(std::span<const Edge>(&e, 1)), h).cost;
        EXPECT_LE(without, base);
        EXPECT_GE(without, base - 1);
      }
    }
  }
}

TEST(ExactOracle, SevenVertexGraphsAgreeWithBruteForce) {
  Rng rng(16);
  for (int iter = 0; iter < 150; ++iter) {
    const Graph g = tfed::testing::random_graph(rng, 7, 0.4);
    if (g.edge_count() > 18) continue;
    const auto costs = tfed::testing::brute_force_costs(g);
    for (int h = 1; h <= 7; ++h) EXPECT_EQ(opt_partition(g, h).cost, costs[h]);
  }
}
