#pragma once

#include <optional>

#include "tfed/graph.hpp"

namespace tfed {

/// A vertex partition into parts of size <= h together with the edges it cuts.
struct PartitionSolution {
  VertexPartition partition;
  EdgeSet deleted_edges;
  long long cost = 0;
};

/// Builds the solution induced by `partition`: deleted edges are exactly the
/// crossing edges.
PartitionSolution solution_from_partition(const Graph& g, VertexPartition partition);

/// Components of g minus `deleted` as a solution (cost = |deleted|).
PartitionSolution solution_from_deletion(const Graph& g, EdgeSet deleted);

/// Checks the PartitionSolution invariants against g and h.
bool is_valid_solution(const Graph& g, int h, const PartitionSolution& s);

struct OracleOptions {
  /// Exhaustive routines refuse graphs with more vertices than this.
  int max_vertices = 18;
};

/// Minimum number of crossing edges over all partitions into parts of size
/// <= h, which equals the minimum edge-deletion number. Enumerates
/// restricted-growth strings with block-size cap h and cut-based pruning.
PartitionSolution opt_partition(const Graph& g, int h, const OracleOptions& options = {});

struct Decision {
  bool yes = false;
  std::optional<PartitionSolution> certificate;
};

/// yes iff opt_partition(g, h).cost <= k.
Decision decide(const Graph& g, long long k, int h, const OracleOptions& options = {});

struct MatchingOptions {
  int max_vertices = 20;
};

/// Maximum-cardinality matching by branch and bound. Throws CapExceeded above
/// the cap; meant as a test oracle.
EdgeSet maximum_matching(const Graph& g, const MatchingOptions& options = {});

/// m - |maximum matching|, the optimum for h = 2.
long long opt_h2(const Graph& g, const MatchingOptions& options = {});

}  // namespace tfed
