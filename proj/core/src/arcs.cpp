#include "tfed/arcs.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "tfed/errors.hpp"

namespace tfed {

namespace {

int reach_from(const DiGraph& d, Vertex start, std::vector<int>& seen, int stamp) {
  std::vector<Vertex> stack{start};
  seen[start] = stamp;
  int count = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex u : d.successors(v)) {
      if (seen[u] != stamp) {
        seen[u] = stamp;
        stack.push_back(u);
      }
    }
  }
  return count;
}

class ArcSearch {
 public:
  ArcSearch(const DiInstance& inst, const ArcOptions& options) : inst_(inst), options_(options) {}

  ArcResult run() {
    ArcResult result;
    std::vector<Arc> deleted;
    result.yes = search(inst_.digraph, deleted, inst_.k, nullptr);
    result.nodes = nodes_;
    if (result.yes) {
      std::sort(best_.begin(), best_.end());
      result.deleted = best_;
    }
    return result;
  }

 private:
  /// The h tree arcs to the first h BFS successors of `start`, or empty when
  /// start reaches at most h vertices.
  std::vector<Arc> violating_tree(const DiGraph& d, Vertex start) const {
    const int n = d.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<Arc> tree;
    std::queue<Vertex> queue;
    queue.push(start);
    seen[start] = 1;
    while (!queue.empty() && static_cast<int>(tree.size()) < inst_.h) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex u : d.successors(v)) {
        if (seen[u]) continue;
        seen[u] = 1;
        tree.push_back({v, u});
        queue.push(u);
        if (static_cast<int>(tree.size()) == inst_.h) break;
      }
    }
    if (static_cast<int>(tree.size()) < inst_.h) return {};
    return tree;
  }

  bool search(const DiGraph& d, std::vector<Arc>& deleted, long long budget,
              const std::vector<int>* parent_reach) {
    ++nodes_;
    const std::vector<int> reach = reach_counts(d);
    if (parent_reach) {
      for (std::size_t v = 0; v < reach.size(); ++v) {
        if (reach[v] > (*parent_reach)[v]) throw std::logic_error("arc deletion increased a reach count");
      }
    }
    Vertex violating = -1;
    for (std::size_t v = 0; v < reach.size(); ++v) {
      if (reach[v] > inst_.h) {
        violating = static_cast<Vertex>(v);
        break;
      }
    }
    if (violating < 0) {
      best_ = deleted;
      return true;
    }
    if (budget <= 0) return false;
    for (const Arc& a : violating_tree(d, violating)) {
      std::vector<Arc> removed{a};
      if (options_.paired && d.has_arc(a.head, a.tail)) removed.push_back({a.head, a.tail});
      const long long cost = static_cast<long long>(removed.size());
      if (cost > budget) continue;
      deleted.insert(deleted.end(), removed.begin(), removed.end());
      const bool found = search(d.without_arcs(removed), deleted, budget - cost, &reach);
      deleted.resize(deleted.size() - removed.size());
      if (found) return true;
    }
    return false;
  }

  const DiInstance& inst_;
  ArcOptions options_;
  long long nodes_ = 0;
  std::vector<Arc> best_;
};

}  // namespace

std::vector<int> reach_counts(const DiGraph& d) {
  const int n = d.vertex_count();
  std::vector<int> seen(n, -1), counts(n, 0);
  for (Vertex v = 0; v < n; ++v) counts[v] = reach_from(d, v, seen, v);
  return counts;
}

ArcResult solve_arcs(const DiInstance& instance, const ArcOptions& options) {
  if (instance.h < 1) throw MalformedInput("h must be positive");
  if (instance.digraph.arc_count() > options.arc_cap && instance.k > options.small_budget) {
    throw CapExceeded("arc search limited to " + std::to_string(options.arc_cap) +
                      " arcs or budget " + std::to_string(options.small_budget));
  }
  return ArcSearch(instance, options).run();
}

}  // namespace tfed
