#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tfed/errors.hpp"
#include "tfed/ip_model.hpp"
#include "tfed/oracle.hpp"
#include "tfed/structure.hpp"
#include "tfed/vdc_iqp.hpp"

using namespace tfed;
using tfed::testing::Rng;

namespace {

bool coefficients_bounded(const IntegerProgramModel& m) {
  for (const auto& row : m.constraints) {
    for (const auto& t : row.terms) {
      if (t.coef < -1 || t.coef > 1) return false;
    }
  }
  for (const auto& q : m.objective_quadratic) {
    if (q.coef < 0 || q.coef > 1) return false;
  }
  return true;
}

}  // namespace

TEST(VdcIqp, K4TwoParts) {
  const Graph g = Graph::complete(4);
  const VdcModel vm = build_vdc_model(g, VertexSet{}, {2, 0}, 2);
  EXPECT_GE(vm.model.find_variable("x_1_1"), 0);
  EXPECT_GE(vm.model.find_variable("x_2_1"), 0);
  EXPECT_EQ(vm.classes.size(), 1u);
  EXPECT_TRUE(coefficients_bounded(vm.model));
  const auto s = solve_ip(vm.model);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->objective, 4);
  EXPECT_EQ(s->values[vm.first_x], 2);
  EXPECT_EQ(s->values[vm.first_x + 1], 2);
}

TEST(VdcIqp, SinglePartNeedsRoomForEverything) {
  const Graph g = Graph::complete(4);  // x = 0 adjacent to all of the triangle
  const VertexSet X{0};
  const VdcModel small = build_vdc_model(g, X, {1, 0}, 3);
  EXPECT_FALSE(solve_ip(small.model).has_value());
  const VdcModel room = build_vdc_model(g, X, {1, 0}, 4);
  const auto s = solve_ip(room.model);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->objective, 0);
}

TEST(VdcIqp, SmallPartIsExemptFromLowerBound) {
  // K4, h = 3, parts of size 3 and 1: only feasible if one part may be small.
  const Graph g = Graph::complete(4);
  const auto exempt = solve_ip(build_vdc_model(g, VertexSet{}, {2, 1}, 3).model);
  ASSERT_TRUE(exempt.has_value());
  EXPECT_EQ(exempt->objective, 3);
}

TEST(VdcIqp, SolveExamples) {
  const auto k4 = solve_vdc(Graph::complete(4), VertexSet{}, 4, 2);
  EXPECT_TRUE(k4.yes);
  EXPECT_EQ(k4.cost, 4);
  const auto k5 = solve_vdc(Graph::complete(5), VertexSet{}, 5, 3);
  EXPECT_FALSE(k5.yes);
  EXPECT_EQ(k5.cost, 6);
  const auto fits = solve_vdc(Graph::complete(5), VertexSet{}, 0, 5);
  EXPECT_TRUE(fits.yes);
  EXPECT_EQ(fits.best_guess.p, 1);
}

TEST(VdcIqp, RejectsNonCliqueComplement) {
  EXPECT_THROW(build_vdc_model(Graph::path(3), VertexSet{}, {1, 0}, 3), NotCliqueComplement);
  EXPECT_THROW(solve_vdc(Graph::path(3), VertexSet{}, 1, 2), NotCliqueComplement);
}

TEST(VdcIqp, ModelRoundTripsThroughFile) {
  Rng rng(51);
  const auto mg = tfed::testing::random_clique_plus_x(rng, 7, 2);
  const VdcModel vm = build_vdc_model(mg.graph, mg.X, {2, 1}, 3);
  EXPECT_EQ(parse_model_file(emit_model_file(vm.model)), vm.model);
}

TEST(VdcIqp, MatchesOracle) {
  Rng rng(52);
  for (int iter = 0; iter < 120; ++iter) {
    const auto mg = tfed::testing::random_clique_plus_x(rng, 8, 2);
    const int h = tfed::testing::uniform(rng, 1, 5);
    const long long opt = opt_partition(mg.graph, h).cost;
    const VdcResult r = solve_vdc(mg.graph, mg.X, opt, h);
    EXPECT_TRUE(r.yes);
    EXPECT_EQ(r.cost, opt);
    EXPECT_TRUE(is_valid_solution(mg.graph, h, r.solution));
    for (int p = 1; p <= 3; ++p) {
      EXPECT_TRUE(coefficients_bounded(build_vdc_model(mg.graph, mg.X, {p, 0}, h).model));
    }
  }
}

TEST(VdcIqp, MergingSmallPartsKeepsOptimality) {
  Rng rng(53);
  for (int iter = 0; iter < 150; ++iter) {
    const Graph g = tfed::testing::random_graph(rng, tfed::testing::uniform(rng, 1, 9), 0.4);
    const int h = tfed::testing::uniform(rng, 1, 5);
    const PartitionSolution opt = opt_partition(g, h);
    std::vector<VertexSet> parts = opt.partition.parts;
    while (true) {
      int a = -1, b = -1;
      for (int i = 0; i < static_cast<int>(parts.size()) && b < 0; ++i) {
        if (static_cast<int>(parts[i].size()) > h / 2) continue;
        if (a < 0) {
          a = i;
        } else {
          b = i;
        }
      }
      if (b < 0) break;
      parts[a].insert(parts[a].end(), parts[b].begin(), parts[b].end());
      parts.erase(parts.begin() + b);
    }
    int small = 0;
    for (const auto& p : parts) small += static_cast<int>(p.size()) < (h + 1) / 2;
    EXPECT_LE(small, 1);
    VertexPartition merged{parts};
    merged.normalize();
    const PartitionSolution s = solution_from_partition(g, merged);
    EXPECT_TRUE(is_valid_solution(g, h, s));
    EXPECT_LE(s.cost, opt.cost);
  }
}

TEST(VdcIqp, AllModulatorsOfSmallGraphs) {
  Rng rng(54);
  for (int iter = 0; iter < 40; ++iter) {
    const auto mg = tfed::testing::random_clique_plus_x(rng, 8, 2);
    const Graph& g = mg.graph;
    const int n = g.vertex_count();
    for (int a = -1; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        VertexSet X;
        if (a >= 0) X.push_back(a);
        if (b > a) X.push_back(b);
        if (!is_clique(g, complement(n, X))) continue;
        for (int h = 1; h <= n; ++h) {
          EXPECT_EQ(solve_vdc(g, X, 0, h).cost, opt_partition(g, h).cost);
        }
      }
    }
  }
}
