#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tfed/errors.hpp"
#include "tfed/oracle.hpp"
#include "tfed/preprocess.hpp"
#include "tfed/structure.hpp"

using namespace tfed;
using tfed::testing::Rng;

namespace {

Graph k5_with_apex() {
  EdgeSet e;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) e.emplace_back(u, v);
  }
  return Graph(6, e);
}

}  // namespace

TEST(Preprocess, DropSmallComponents) {
  const EdgeSet e{{0, 1}, {0, 2}, {1, 2}, {3, 4}};
  const Graph g(5, e);
  std::vector<Vertex> kept;
  const Graph r = drop_small_components(g, 2, kept);
  EXPECT_EQ(r, Graph::complete(3));
  EXPECT_EQ(kept, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(drop_small_components(g, 3).vertex_count(), 0);
  const Graph two = Graph::complete(3).disjoint_union(Graph::complete(3));
  EXPECT_EQ(drop_small_components(two, 2).vertex_count(), 6);
}

TEST(Preprocess, TrivialAnswers) {
  EXPECT_EQ(trivial_answer(Graph::complete(4), 5, 1), Answer::no);
  EXPECT_EQ(trivial_answer(Graph::complete(4), 4, 2), Answer::yes);
  EXPECT_EQ(trivial_answer(Graph::cycle(5), 0, 5), Answer::yes);
  EXPECT_EQ(trivial_answer(Graph::complete(4), 3, 2), Answer::no);
  EXPECT_EQ(trivial_answer(Graph::complete(5), 3, 3), Answer::unknown);
}

TEST(Preprocess, RuleRetriggersUntilClassIsSmall) {
  const VertexSet X{0};
  const auto r = rule1_apply(k5_with_apex(), X, 20, 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->k, 5);
  EXPECT_EQ(r->total_delta(), 15);
  ASSERT_EQ(r->trace.size(), 5u);
  EXPECT_EQ(r->trace[0].budget_delta, 5);
  EXPECT_EQ(r->trace[4].budget_delta, 1);
  EXPECT_EQ(r->trace[0].rule, "twin-class-removal");
  EXPECT_EQ(r->graph.vertex_count(), 1);
  EXPECT_EQ(r->X, VertexSet{0});
}

TEST(Preprocess, RuleLeavesSmallClassesAlone) {
  // ℓ = 1, h = 2: threshold ℓ(h-1)+h = 3; a class of 2 stays.
  const EdgeSet e{{0, 1}, {0, 2}, {1, 2}};
  const VertexSet X{0};
  const auto r = rule1_apply(Graph(3, e), X, 4, 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->trace.empty());
  EXPECT_EQ(r->graph, Graph(3, e));
  EXPECT_EQ(r->k, 4);
}

TEST(Preprocess, RuleReportsNoWhenBudgetRunsOut) {
  const VertexSet X{0};
  EXPECT_FALSE(rule1_apply(k5_with_apex(), X, 4, 1).has_value());
}

TEST(Preprocess, RuleRejectsNonClusterRemainder) {
  const VertexSet none;
  EXPECT_THROW(rule1_apply(Graph::path(3), none, 3, 2), MalformedInput);
}

TEST(Preprocess, VertexBound) {
  // Path on 2kh+1 vertices with k = 1, h = 2.
  EXPECT_EQ(yes_instance_vertex_bound(Graph::path(5), 1, 2), Answer::no);
  EXPECT_EQ(yes_instance_vertex_bound(Graph::path(4), 1, 2), Answer::unknown);
  EXPECT_EQ(yes_instance_vertex_bound(Graph(0), 0, 2), Answer::unknown);
}

TEST(Preprocess, VertexBoundNeverRejectsYesInstances) {
  Rng rng(21);
  for (int iter = 0; iter < 200; ++iter) {
    const Graph g = tfed::testing::random_graph(rng, tfed::testing::uniform(rng, 1, 10), 0.3);
    const int h = tfed::testing::uniform(rng, 1, 4);
    const long long opt = opt_partition(g, h).cost;
    EXPECT_NE(yes_instance_vertex_bound(drop_small_components(g, h), opt, h), Answer::no);
  }
}

TEST(Preprocess, TrivialAnswerAgreesWithOracle) {
  Rng rng(22);
  for (int iter = 0; iter < 200; ++iter) {
    const Graph g = tfed::testing::random_graph(rng, tfed::testing::uniform(rng, 1, 9), 0.4);
    const int h = tfed::testing::uniform(rng, 1, 5);
    const long long k = tfed::testing::uniform(rng, 0, 6);
    const Answer a = trivial_answer(g, k, h);
    if (a == Answer::unknown) continue;
    EXPECT_EQ(a == Answer::yes, opt_partition(g, h).cost <= k);
  }
}

TEST(Preprocess, DroppingSmallComponentsKeepsOptimum) {
  Rng rng(23);
  for (int iter = 0; iter < 150; ++iter) {
    const Graph g = tfed::testing::random_graph(rng, tfed::testing::uniform(rng, 1, 9), 0.25);
    const int h = tfed::testing::uniform(rng, 1, 4);
    EXPECT_EQ(opt_partition(drop_small_components(g, h), h).cost, opt_partition(g, h).cost);
  }
}

TEST(Preprocess, RuleSafeWithFoundDeletionSets) {
  Rng rng(24);
  for (int iter = 0; iter < 150; ++iter) {
    const Graph g = tfed::testing::random_graph(rng, tfed::testing::uniform(rng, 1, 9), 0.5);
    const auto X = find_cluster_deletion_set(g, 2);
    if (!X) continue;
    for (int h = 1; h <= 3; ++h) {
      const long long opt = opt_partition(g, h).cost;
      for (long long k = 0; k <= opt + 2; ++k) {
        const auto r = rule1_apply(g, *X, k, h);
        const bool reduced_yes = r && opt_partition(r->graph, h).cost <= r->k;
        EXPECT_EQ(reduced_yes, opt <= k);
        if (r && opt <= k) EXPECT_EQ(opt, opt_partition(r->graph, h).cost + r->total_delta());
      }
    }
  }
}
