#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfed/graph.hpp"

namespace tfed {

struct Extract {
  VertexSet vertices;
  long long cut = 0;
};

struct ExtractOptions {
  /// Connected sets enumerated before CapExceeded is thrown.
  long long max_connected_sets = 5'000'000;
};

/// Some A with ceil(h/2) <= |A| <= h and at most k edges leaving A, of
/// minimum cut and then lexicographically smallest. A is a union of
/// pairwise non-adjacent connected sets of size <= h, each leaving at most k
/// edges; all such sets are enumerated. Intended for connected g with more
/// than h vertices.
std::optional<Extract> find_bounded_extract(const Graph& g, long long k, int h,
                                            const ExtractOptions& options = {});

enum class ApproxOutcome { solution, no_instance };

std::string to_string(ApproxOutcome o);

struct ApproxRecord {
  VertexSet component;  // vertices of the component that was too large
  VertexSet extracted;
  long long cut = 0;
};

struct ApproxReport {
  ApproxOutcome outcome = ApproxOutcome::solution;
  /// Valid only for ApproxOutcome::solution.
  EdgeSet deleted_edges;
  int iterations = 0;
  std::vector<ApproxRecord> records;
};

/// While a component has more than h vertices, cuts a bounded extract out of
/// it. Reports no_instance when the vertex-count guard fails or no extract
/// exists; otherwise the deletion set is feasible and, on yes-instances,
/// holds at most 4k^2 edges.
ApproxReport approx_solve(const Graph& g, long long k, int h, const ExtractOptions& options = {});

}  // namespace tfed
