#include <benchmark/benchmark.h>

#include <random>

#include "tfed/oracle.hpp"

namespace {

tfed::Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  tfed::EdgeSet edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return tfed::Graph(n, edges);
}

void BM_OptPartition(benchmark::State& state) {
  const tfed::Graph g = random_graph(static_cast<int>(state.range(0)), 0.35, 1);
  for (auto _ : state) benchmark::DoNotOptimize(tfed::opt_partition(g, 3).cost);
}
BENCHMARK(BM_OptPartition)->DenseRange(6, 12, 2);

void BM_MaximumMatching(benchmark::State& state) {
  const tfed::Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tfed::maximum_matching(g).size());
}
BENCHMARK(BM_MaximumMatching)->DenseRange(8, 20, 4);

}  // namespace
