#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tfed/errors.hpp"
#include "tfed/oracle.hpp"
#include "tfed/split.hpp"
#include "tfed/structure.hpp"

using namespace tfed;
using tfed::testing::Rng;

namespace {

// Triangle 0,1,2; w1 = 3 adjacent to 0,1; w2 = 4 adjacent to 2.
Graph triangle_with_two_leaves() {
  const EdgeSet e{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}};
  return Graph(5, e);
}

}  // namespace

TEST(SplitSolver, RecognizeExamples) {
  const EdgeSet e{{0, 1}, {0, 2}, {1, 2}, {2, 3}};
  const auto view = recognize_split(Graph(4, e));
  EXPECT_EQ(view.clique_side, (VertexSet{0, 1, 2}));
  EXPECT_EQ(view.independent_side, (VertexSet{3}));
  EXPECT_THROW(recognize_split(Graph::cycle(4)), NotSplit);
  const auto edgeless = recognize_split(Graph(4));
  EXPECT_LE(edgeless.clique_side.size(), 1u);
  EXPECT_EQ(edgeless.clique_side.size() + edgeless.independent_side.size(), 4u);
}

TEST(SplitSolver, LargeCliqueExamples) {
  const Graph g = triangle_with_two_leaves();
  const auto yes = solve_split(g, 1, 4);
  EXPECT_EQ(yes.which, SplitCase::large_clique);
  ASSERT_TRUE(yes.yes);
  ASSERT_TRUE(yes.certificate.has_value());
  EXPECT_EQ(yes.certificate->deleted_edges, (EdgeSet{{2, 4}}));
  EXPECT_FALSE(solve_split(g, 0, 4).yes);
  const auto k5 = solve_split(Graph::complete(5), 3, 4);
  EXPECT_EQ(k5.which, SplitCase::large_clique);
  EXPECT_FALSE(k5.yes);
  EXPECT_EQ(to_string(SplitCase::large_clique), "large-clique");
  EXPECT_EQ(to_string(SplitCase::small_cover), "small-cover");
}

TEST(SplitSolver, CoverSolverMatchesOracle) {
  Rng rng(61);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = tfed::testing::uniform(rng, 2, 9);
    const Graph g = tfed::testing::random_split_graph(rng, n, tfed::testing::uniform(rng, 1, std::min(n, 4)), 0.5);
    const auto view = recognize_split(g);
    const int h = tfed::testing::uniform(rng, 1, 5);
    const PartitionSolution s = solve_with_vertex_cover(g, view.clique_side, h);
    EXPECT_EQ(s.cost, opt_partition(g, h).cost);
    EXPECT_TRUE(is_valid_solution(g, h, s));
  }
}

TEST(SplitSolver, RecognitionProducesValidSplitPartition) {
  Rng rng(62);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = tfed::testing::uniform(rng, 1, 10);
    const Graph g = tfed::testing::random_split_graph(rng, n, tfed::testing::uniform(rng, 0, n), 0.4);
    const auto view = recognize_split(g);
    EXPECT_TRUE(is_clique(g, view.clique_side));
    EXPECT_TRUE(is_independent(g, view.independent_side));
    EXPECT_EQ(view.clique_side.size() + view.independent_side.size(), static_cast<std::size_t>(n));
  }
}

TEST(SplitSolver, DecisionMatchesOracle) {
  Rng rng(63);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = tfed::testing::uniform(rng, 2, 10);
    const Graph g = tfed::testing::random_split_graph(rng, n, tfed::testing::uniform(rng, 1, n), 0.5);
    const int k = tfed::testing::uniform(rng, 0, 6);
    const int h = tfed::testing::uniform(rng, 1, n);
    const long long opt = opt_partition(g, h).cost;
    const auto r = solve_split(g, k, h);
    EXPECT_EQ(r.yes, opt <= k);
    if (r.yes) {
      ASSERT_TRUE(r.certificate.has_value());
      EXPECT_EQ(*r.cost, opt);
      EXPECT_TRUE(is_valid_solution(g, h, *r.certificate));
    }
  }
}

TEST(SplitSolver, GreedySelectionSurvivesExchanges) {
  Rng rng(64);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = tfed::testing::uniform(rng, 4, 10);
    const Graph g = tfed::testing::random_split_graph(rng, n, tfed::testing::uniform(rng, 3, n - 1), 0.5);
    const auto view = recognize_split(g);
    const int clique = static_cast<int>(view.clique_side.size());
    const int h = tfed::testing::uniform(rng, clique, n);
    const auto r = solve_split(g, clique - 2, h);
    if (r.which != SplitCase::large_clique || !r.certificate) continue;
    // V2 vertices inside the clique's part are the selected ones.
    const auto part = r.certificate->partition.part_of(n);
    const int home = part[view.clique_side.front()];
    long long base = r.certificate->cost;
    for (Vertex in : view.independent_side) {
      if (part[in] != home) continue;
      for (Vertex out : view.independent_side) {
        if (part[out] == home) continue;
        // Swapping changes the cost by deg(in) - deg(out).
        EXPECT_GE(base + g.degree(in) - g.degree(out), base);
      }
    }
  }
}

TEST(SplitSolver, ExhaustiveSmallSplitGraphs) {
  Rng rng(65);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = tfed::testing::uniform(rng, 2, 9);
    const Graph g = tfed::testing::random_split_graph(rng, n, tfed::testing::uniform(rng, 1, n), 0.5);
    for (int h = 1; h <= n; ++h) {
      const long long opt = opt_partition(g, h).cost;
      for (int k = 0; k <= 6; ++k) EXPECT_EQ(solve_split(g, k, h).yes, opt <= k);
    }
  }
}
