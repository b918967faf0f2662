#pragma once

#include <vector>

#include "tfed/graph.hpp"

namespace tfed {

/// Number of vertices reachable from each vertex, the vertex itself included.
std::vector<int> reach_counts(const DiGraph& d);

struct ArcOptions {
  /// solve_arcs refuses instances with more arcs than this unless k <= small_budget.
  int arc_cap = 24;
  long long small_budget = 3;
  /// Delete an arc together with its reverse (both count toward k).
  bool paired = false;
};

struct ArcResult {
  bool yes = false;
  std::vector<Arc> deleted;  // sorted
  long long nodes = 0;
};

/// Exact decision by bounded search: a violating vertex reaches at least
/// h+1 vertices through the first h+1 vertices of its BFS tree, so one of
/// those h tree arcs must go. Throws CapExceeded outside the size caps.
ArcResult solve_arcs(const DiInstance& instance, const ArcOptions& options = {});

}  // namespace tfed
