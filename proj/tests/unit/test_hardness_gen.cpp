#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tfed/arcs.hpp"
#include "tfed/decomposition.hpp"
#include "tfed/errors.hpp"
#include "tfed/hardness.hpp"
#include "tfed/path_dp.hpp"
#include "tfed/split.hpp"
#include "tfed/structure.hpp"

using namespace tfed;

namespace {

std::string meta_value(const Metadata& m, const std::string& key) {
  for (const auto& [k, v] : m) {
    if (k == key) return v;
  }
  return {};
}

bool is_acyclic(const DiGraph& d) {
  std::vector<int> indegree(d.vertex_count(), 0);
  for (const Arc& a : d.arcs()) ++indegree[a.head];
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex w : d.successors(v)) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return seen == d.vertex_count();
}

}  // namespace

TEST(Hardness, BinPackingOracle) {
  EXPECT_TRUE(binpack_decide({{1, 1}, 2, 1}));
  EXPECT_FALSE(binpack_decide({{1, 1}, 1, 1}));
  EXPECT_TRUE(binpack_decide({{2, 2, 3}, 2, 4}));
  EXPECT_FALSE(binpack_decide({{3, 3, 3}, 2, 5}));
}

TEST(Hardness, HittingSetOracle) {
  EXPECT_FALSE(hitting_decide({3, {{0}, {1}}, 1}));
  EXPECT_TRUE(hitting_decide({3, {{0, 1}, {1, 2}}, 1}));
  EXPECT_TRUE(hitting_decide({3, {}, 0}));
}

TEST(Hardness, BinPackingConstructionParameters) {
  const auto g = gen_binpack({{1, 1}, 2, 1}, GadgetFamily::clique);
  EXPECT_EQ(g.instance.k, 2);
  EXPECT_EQ(g.instance.h, 12);
  EXPECT_EQ(meta_value(g.metadata, "h_prime"), "10");
  EXPECT_EQ(g.instance.graph.vertex_count(), 2 + 2 + 2 * 10);
  EXPECT_TRUE(g.expected_yes);
  EXPECT_EQ(validate(g.instance.graph, g.decomposition), "");
  EXPECT_TRUE(is_cluster_graph(g.instance.graph.induced(complement(g.instance.graph.vertex_count(), g.X))));
}

TEST(Hardness, BinPackingSingleBinIsNo) {
  const auto g = gen_binpack({{1, 1}, 1, 1}, GadgetFamily::clique);
  EXPECT_EQ(g.instance.k, 0);
  EXPECT_EQ(g.instance.h, 10);
  EXPECT_FALSE(g.expected_yes);
  // Single component: x, both items and the 8-vertex gadget.
  EXPECT_EQ(max_component_size(g.instance.graph), 11);
  const auto solved = dp_solve(g.instance.graph, g.decomposition, g.instance.h, g.instance.k);
  EXPECT_FALSE(solved.has_value());
}

TEST(Hardness, FamiliesAgree) {
  const BinPackingInstance bp{{1, 2}, 2, 2};
  const auto clique = gen_binpack(bp, GadgetFamily::clique);
  const auto path = gen_binpack(bp, GadgetFamily::path);
  const auto star = gen_binpack(bp, GadgetFamily::star);
  EXPECT_EQ(clique.instance.k, path.instance.k);
  EXPECT_EQ(clique.instance.h, path.instance.h);
  EXPECT_EQ(clique.expected_yes, path.expected_yes);
  EXPECT_EQ(star.instance.graph.vertex_count(), path.instance.graph.vertex_count());
  for (const auto* g : {&clique, &path, &star}) {
    EXPECT_EQ(validate(g->instance.graph, g->decomposition), "");
    const auto solved = dp_solve(g->instance.graph, g->decomposition, g->instance.h, g->instance.k);
    EXPECT_EQ(solved.has_value(), g->expected_yes);
  }
}

TEST(Hardness, SplitParameters) {
  const auto p = split_parameters({{1, 1}, 2, 1});
  EXPECT_EQ(p.alpha, SplitParameters::Big(1) << 100);
  EXPECT_THROW(gen_split({{1, 1}, 2, 1}), InstanceTooLarge);
  EXPECT_THROW(split_parameters({{1, 1}, 2, 1}, 7), AlphaTooSmall);
  const auto single = split_parameters({{1, 2}, 1, 3}, 8);
  EXPECT_EQ(single.k, 2 * 2 * 1);
}

TEST(Hardness, SplitConstructionMatchesBinPacking) {
  const auto g = gen_split({{1, 1}, 2, 1}, 8);
  EXPECT_TRUE(g.expected_yes);
  const auto view = recognize_split(g.instance.graph);
  EXPECT_TRUE(is_clique(g.instance.graph, g.X));
  EXPECT_TRUE(is_independent(g.instance.graph, complement(g.instance.graph.vertex_count(), g.X)));
  EXPECT_EQ(view.clique_side.size(), g.X.size());
  EXPECT_EQ(solve_split(g.instance.graph, g.instance.k, g.instance.h).yes, g.expected_yes);
}

TEST(Hardness, HittingDagExample) {
  const HittingSetInstance hs{2, {{0}}, 1};
  EXPECT_THROW(gen_hitting_dag(hs, 2), ParameterTooSmall);
  const auto c = smallest_valid_c(hs);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, 3);
  const auto g = gen_hitting_dag(hs, *c);
  EXPECT_EQ(g.instance.h, 8);
  EXPECT_TRUE(g.expected_yes);
  EXPECT_TRUE(g.validated);
  EXPECT_EQ(solve_arcs(g.instance).yes, true);
}

TEST(Hardness, HittingDagIsAcyclicAndFaithful) {
  const std::vector<HittingSetInstance> cases{
      {2, {}, 0}, {2, {{0}, {1}}, 1}, {3, {{0, 1}, {1, 2}}, 1}, {3, {{0}, {1}, {2}}, 2}};
  for (const auto& hs : cases) {
    const auto c = smallest_valid_c(hs);
    ASSERT_TRUE(c.has_value());
    const auto g = gen_hitting_dag(hs, *c);
    EXPECT_TRUE(is_acyclic(g.instance.digraph));
    EXPECT_EQ(solve_arcs(g.instance).yes, hitting_decide(hs));
  }
}

TEST(Hardness, RejectsBadParameters) {
  EXPECT_THROW(gen_hitting_dag({1, {{0}}, 1}, 3), ParameterTooSmall);
  EXPECT_THROW(gen_hitting_dag({2, {{0}}, 1}, 1), ParameterTooSmall);
  EXPECT_THROW(parse_gadget_family("cycle"), MalformedInput);
}

TEST(Hardness, GadgetsAreTheComponentsOutsideX) {
  for (GadgetFamily family : {GadgetFamily::clique, GadgetFamily::path, GadgetFamily::star}) {
    const BinPackingInstance bp{{1, 2, 3}, 2, 3};
    const auto g = gen_binpack(bp, family);
    const int n = g.instance.graph.vertex_count();
    const Graph rest = g.instance.graph.induced(complement(n, g.X));
    std::vector<int> sizes;
    for (const auto& part : connected_components(rest).parts) sizes.push_back(static_cast<int>(part.size()));
    const int h_prime = g.instance.h - bp.capacity - 1;
    EXPECT_EQ(sizes, (std::vector<int>{1, 2, 3, h_prime, h_prime}));
  }
}

TEST(Hardness, ExhaustiveSmallReductions) {
  const std::vector<std::vector<int>> tuples{{1}, {2}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}};
  for (const auto& sizes : tuples) {
    for (int t = 1; t <= 2; ++t) {
      for (int cap = 1; cap <= 2; ++cap) {
        const BinPackingInstance bp{sizes, t, cap};
        const bool truth = binpack_decide(bp);
        const auto gb = gen_binpack(bp, GadgetFamily::clique);
        EXPECT_EQ(dp_solve(gb.instance.graph, gb.decomposition, gb.instance.h, gb.instance.k).has_value(), truth);
        const long long nn = static_cast<long long>(sizes.size());
        const auto gs = gen_split(bp, 2 * nn * nn);
        EXPECT_NO_THROW(recognize_split(gs.instance.graph));
        EXPECT_EQ(solve_split(gs.instance.graph, gs.instance.k, gs.instance.h).yes, truth);
      }
    }
  }
}
