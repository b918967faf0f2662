#pragma once

#include <optional>

#include "tfed/decomposition.hpp"
#include "tfed/graph.hpp"
#include "tfed/oracle.hpp"

namespace tfed {

/// Counters of one DP run.
struct DpStats {
  long long states_created = 0;
  /// Candidate states that hit an existing (partition, sizes) key.
  long long states_merged = 0;
  long long states_pruned = 0;
  long long widest_layer = 0;
};

/// Exact minimum over partitions with part sizes <= h, computed over the nice
/// form of `pd`.
///
/// A state is a canonical partition of the current bag plus, per part, the
/// number of vertices (forgotten ones included) already committed to it.
/// Introduce(v) merges v with any subset of the parts holding a bag
/// neighbour of v and pays for the bag neighbours left outside; Forget(v)
/// finalizes a part once its last bag vertex leaves. With `k_cap`, states
/// costing more than k_cap are dropped and nullopt means no solution of cost
/// <= k_cap. Throws InvalidDecomposition when pd is not valid for g.
std::optional<PartitionSolution> dp_solve(const Graph& g, const PathDecomposition& pd, int h,
                                          std::optional<long long> k_cap = std::nullopt,
                                          DpStats* stats = nullptr);

/// Budget-k decision on a clique path (every bag induces a clique): a new
/// vertex joins exactly one part or opens its own, at most one part may hold
/// more than k+1 vertices, and bags larger than k+1 are never split.
/// Returns a certificate of cost <= k, or nullopt for a no-instance. Throws
/// NotCliqueBags when a bag is not a clique.
std::optional<PartitionSolution> dp_solve_interval(const Graph& g, const PathDecomposition& pd,
                                                   long long k, int h,
                                                   DpStats* stats = nullptr);

}  // namespace tfed
