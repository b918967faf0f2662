#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tfed/arcs.hpp"
#include "tfed/errors.hpp"
#include "tfed/oracle.hpp"

using namespace tfed;
using tfed::testing::Rng;

namespace {

DiGraph directed_path(int n) {
  std::vector<Arc> arcs;
  for (int v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  return DiGraph(n, arcs);
}

}  // namespace

TEST(Arcs, ReachCounts) {
  const std::vector<Arc> one{{0, 1}};
  EXPECT_EQ(reach_counts(DiGraph(2, one)), (std::vector<int>{2, 1}));
  EXPECT_EQ(reach_counts(directed_path(4)), (std::vector<int>{4, 3, 2, 1}));
}

TEST(Arcs, SolveExamples) {
  const auto p4 = solve_arcs({directed_path(4), 1, 2});
  ASSERT_TRUE(p4.yes);
  EXPECT_EQ(p4.deleted, (std::vector<Arc>{{1, 2}}));
  const std::vector<Arc> star{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_FALSE(solve_arcs({DiGraph(4, star), 1, 2}).yes);
  const auto fine = solve_arcs({directed_path(2), 0, 2});
  EXPECT_TRUE(fine.yes);
  EXPECT_TRUE(fine.deleted.empty());
}

TEST(Arcs, MatchesExhaustiveSearch) {
  Rng rng(81);
  for (int iter = 0; iter < 120; ++iter) {
    const int n = tfed::testing::uniform(rng, 2, 7);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && tfed::testing::coin(rng, 0.25)) arcs.push_back({u, v});
      }
    }
    if (arcs.size() > 14) continue;
    const DiGraph d(n, arcs);
    const int h = tfed::testing::uniform(rng, 1, n);
    const int k = tfed::testing::uniform(rng, 0, 3);
    bool expected = false;
    const int m = d.arc_count();
    for (int mask = 0; mask < (1 << m) && !expected; ++mask) {
      if (__builtin_popcount(mask) > k) continue;
      std::vector<Arc> removed;
      for (int i = 0; i < m; ++i) {
        if (mask >> i & 1) removed.push_back(d.arcs()[i]);
      }
      const auto counts = reach_counts(d.without_arcs(removed));
      expected = std::all_of(counts.begin(), counts.end(), [&](int c) { return c <= h; });
    }
    const ArcResult r = solve_arcs({d, k, h});
    EXPECT_EQ(r.yes, expected);
    if (r.yes) {
      EXPECT_LE(static_cast<long long>(r.deleted.size()), k);
      const auto counts = reach_counts(d.without_arcs(r.deleted));
      for (int c : counts) EXPECT_LE(c, h);
    }
  }
}

TEST(Arcs, PairedDeletionMatchesUndirectedOracle) {
  Rng rng(82);
  ArcOptions options;
  options.paired = true;
  options.arc_cap = 1000;
  for (int iter = 0; iter < 80; ++iter) {
    const Graph g = tfed::testing::random_graph(rng, tfed::testing::uniform(rng, 1, 6), 0.45);
    const int h = tfed::testing::uniform(rng, 1, g.vertex_count());
    const long long opt = opt_partition(g, h).cost;
    for (long long k = 0; k <= 4; ++k) {
      const ArcResult r = solve_arcs({DiGraph::bidirected(g), 2 * k, h}, options);
      EXPECT_EQ(r.yes, opt <= k);
    }
  }
}
