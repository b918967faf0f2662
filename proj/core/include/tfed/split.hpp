#pragma once

#include <optional>
#include <string>

#include "tfed/graph.hpp"
#include "tfed/oracle.hpp"

namespace tfed {

/// clique_side induces a clique, independent_side an edgeless graph.
struct SplitPartitionView {
  VertexSet clique_side;
  VertexSet independent_side;
};

/// Orders vertices by degree (descending, lowest identifier first) and
/// returns the longest prefix that is a clique with an independent suffix.
/// Throws NotSplit when g is not a split graph.
SplitPartitionView recognize_split(const Graph& g);

enum class SplitCase {
  /// |V1| > k+1: V1 cannot be cut, V2 vertices are attached greedily.
  large_clique,
  /// |V1| <= k+1: V1 is a small vertex cover.
  small_cover,
};

std::string to_string(SplitCase c);

struct SplitResult {
  bool yes = false;
  SplitCase which = SplitCase::small_cover;
  /// Optimum when known: always for small_cover, for large_clique only on yes.
  std::optional<long long> cost;
  std::optional<PartitionSolution> certificate;
};

/// Decides (g, k, h) for a split graph g.
SplitResult solve_split(const Graph& g, long long k, int h);

/// Exact optimum for a graph whose vertices outside `cover` are pairwise
/// non-adjacent. Enumerates partitions of the cover and assigns the other
/// vertices, grouped by neighbourhood, to cover parts by min-cost flow.
/// Throws CapExceeded when |cover| > max_cover.
PartitionSolution solve_with_vertex_cover(const Graph& g, const VertexSet& cover, int h,
                                          int max_cover = 12);

}  // namespace tfed
