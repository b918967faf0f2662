#include <benchmark/benchmark.h>

#include "tfed/nd_ilp.hpp"
#include "tfed/vdc_iqp.hpp"

namespace {

void BM_NdCompleteBipartite(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  tfed::EdgeSet edges;
  for (int u = 0; u < side; ++u) {
    for (int v = side; v < 2 * side; ++v) edges.emplace_back(u, v);
  }
  const tfed::Graph g(2 * side, edges);
  for (auto _ : state) benchmark::DoNotOptimize(tfed::solve_nd(g, 1000, 4).cost);
}
BENCHMARK(BM_NdCompleteBipartite)->DenseRange(4, 16, 4);

void BM_VdcClique(benchmark::State& state) {
  const tfed::Graph g = tfed::Graph::complete(static_cast<int>(state.range(0)));
  const tfed::VertexSet X{0};
  for (auto _ : state) benchmark::DoNotOptimize(tfed::solve_vdc(g, X, 1000, 3).cost);
}
BENCHMARK(BM_VdcClique)->DenseRange(4, 10, 3);

}  // namespace
