#include <benchmark/benchmark.h>

#include "tfed/decomposition.hpp"
#include "tfed/hardness.hpp"
#include "tfed/path_dp.hpp"

namespace {

void BM_DpPathGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tfed::Graph g = tfed::Graph::path(n);
  tfed::PathDecomposition pd;
  for (int i = 0; i + 1 < n; ++i) pd.bags.push_back({i, i + 1});
  for (auto _ : state) benchmark::DoNotOptimize(tfed::dp_solve(g, pd, 4)->cost);
}
BENCHMARK(BM_DpPathGraph)->RangeMultiplier(4)->Range(16, 1024);

void BM_DpBinPackingConstruction(benchmark::State& state) {
  const tfed::BinPackingInstance bp{{1, 2, 2}, 2, static_cast<int>(state.range(0))};
  const auto gen = tfed::gen_binpack(bp, tfed::GadgetFamily::path);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tfed::dp_solve(gen.instance.graph, gen.decomposition, gen.instance.h, gen.instance.k).has_value());
  }
}
BENCHMARK(BM_DpBinPackingConstruction)->DenseRange(3, 5);

void BM_IntervalDp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<tfed::Interval> intervals;
  for (int i = 0; i < n; ++i) intervals.push_back({tfed::Rational(i), tfed::Rational(i + 2)});
  const auto model = tfed::interval_clique_path(intervals);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tfed::dp_solve_interval(model.graph, model.decomposition, n, 4).has_value());
  }
}
BENCHMARK(BM_IntervalDp)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
