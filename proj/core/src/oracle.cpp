#include "tfed/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tfed/errors.hpp"
#include "tfed/structure.hpp"

namespace tfed {

PartitionSolution solution_from_partition(const Graph& g, VertexPartition partition) {
  partition.normalize();
  PartitionSolution s;
  s.deleted_edges = crossing_edges(g, partition);
  s.cost = static_cast<long long>(s.deleted_edges.size());
  s.partition = std::move(partition);
  return s;
}

PartitionSolution solution_from_deletion(const Graph& g, EdgeSet deleted) {
  for (Edge& e : deleted) e = Edge(e.u, e.v);
  std::sort(deleted.begin(), deleted.end());
  deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
  PartitionSolution s;
  s.partition = connected_components(g.without_edges(deleted));
  s.cost = static_cast<long long>(deleted.size());
  s.deleted_edges = std::move(deleted);
  return s;
}

bool is_valid_solution(const Graph& g, int h, const PartitionSolution& s) {
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  if (!s.partition.is_partition_of(all)) return false;
  for (const auto& part : s.partition.parts) {
    if (static_cast<int>(part.size()) > h) return false;
  }
  if (s.cost != static_cast<long long>(s.deleted_edges.size())) return false;
  // Deleted edges must contain every crossing edge; for a partition-shaped
  // solution they are exactly the crossing edges.
  EdgeSet crossing = crossing_edges(g, s.partition);
  EdgeSet deleted = s.deleted_edges;
  std::sort(deleted.begin(), deleted.end());
  if (deleted != crossing) return false;
  return deletion_feasible(g, deleted, h);
}

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, int h, long long upper_bound)
      : g_(g),
        h_(h),
        n_(g.vertex_count()),
        block_(n_, -1),
        size_(n_ + 1, 0),
        count_(n_ + 1, 0),
        best_cost_(upper_bound) {}

  /// Returns true if a partition with cost < initial upper bound was found.
  bool run() {
    found_ = false;
    recurse(0, 0, 0);
    return found_;
  }

  long long best_cost() const { return best_cost_; }
  const std::vector<int>& best_block() const { return best_block_; }

 private:
  // Every unassigned vertex joins at most one block, so it must cut at least
  // (assigned neighbours) - (assigned neighbours in its best open block).
  long long lower_bound(Vertex next, int blocks) {
    long long bound = 0;
    for (Vertex v = next; v < n_; ++v) {
      int assigned = 0;
      std::fill(count_.begin(), count_.begin() + blocks, 0);
      for (Vertex w : g_.neighbors(v)) {
        if (w < next) {
          ++assigned;
          ++count_[block_[w]];
        }
      }
      if (assigned == 0) continue;
      int keep = 0;
      for (int b = 0; b < blocks; ++b) {
        if (size_[b] < h_) keep = std::max(keep, count_[b]);
      }
      bound += assigned - keep;
    }
    return bound;
  }

  void recurse(Vertex v, int blocks, long long cost) {
    if (cost >= best_cost_) return;
    if (v == n_) {
      best_cost_ = cost;
      best_block_ = block_;
      found_ = true;
      return;
    }
    if (cost + lower_bound(v, blocks) >= best_cost_) return;

    // Neighbours already placed, per block.
    std::vector<int> nb_in(blocks + 1, 0);
    int placed = 0;
    for (Vertex w : g_.neighbors(v)) {
      if (w < v) {
        ++nb_in[block_[w]];
        ++placed;
      }
    }
    // Existing blocks first (most kept edges first), then a fresh block.
    std::vector<int> order(blocks);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return nb_in[a] > nb_in[b]; });
    for (int b : order) {
      if (size_[b] >= h_) continue;
      block_[v] = b;
      ++size_[b];
      recurse(v + 1, blocks, cost + placed - nb_in[b]);
      --size_[b];
    }
    block_[v] = blocks;
    size_[blocks] = 1;
    recurse(v + 1, blocks + 1, cost + placed);
    size_[blocks] = 0;
    block_[v] = -1;
  }

  const Graph& g_;
  int h_;
  int n_;
  std::vector<int> block_;
  std::vector<int> size_;
  std::vector<int> count_;
  long long best_cost_;
  std::vector<int> best_block_;
  bool found_ = false;
};

void check_cap(const Graph& g, int cap) {
  if (g.vertex_count() > cap) {
    throw CapExceeded("exhaustive oracle limited to " + std::to_string(cap) + " vertices, got " +
                      std::to_string(g.vertex_count()));
  }
}

VertexPartition partition_from_blocks(const std::vector<int>& block) {
  VertexPartition p;
  for (Vertex v = 0; v < static_cast<Vertex>(block.size()); ++v) {
    const auto b = static_cast<std::size_t>(block[v]);
    if (p.parts.size() <= b) p.parts.resize(b + 1);
    p.parts[b].push_back(v);
  }
  p.normalize();
  return p;
}

VertexPartition singletons(int n) {
  VertexPartition p;
  for (Vertex v = 0; v < n; ++v) p.parts.push_back({v});
  return p;
}

}  // namespace

PartitionSolution opt_partition(const Graph& g, int h, const OracleOptions& options) {
  if (h < 1) throw MalformedInput("h must be positive");
  check_cap(g, options.max_vertices);
  // All singletons (cost m) is always feasible; search for anything cheaper.
  PartitionSearch search(g, h, g.edge_count());
  if (search.run()) return solution_from_partition(g, partition_from_blocks(search.best_block()));
  return solution_from_partition(g, singletons(g.vertex_count()));
}

Decision decide(const Graph& g, long long k, int h, const OracleOptions& options) {
  if (h < 1) throw MalformedInput("h must be positive");
  check_cap(g, options.max_vertices);
  Decision d;
  if (k < 0) return d;
  if (k >= g.edge_count()) {
    d.yes = true;
    d.certificate = opt_partition(g, h, options);
    return d;
  }
  PartitionSearch search(g, h, k + 1);
  if (search.run()) {
    d.yes = true;
    d.certificate = solution_from_partition(g, partition_from_blocks(search.best_block()));
  }
  return d;
}

namespace {

class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& g) : g_(g), matched_(g.vertex_count(), 0) {}

  EdgeSet run() {
    recurse(0);
    return best_;
  }

 private:
  void recurse(Vertex v) {
    const int n = g_.vertex_count();
    while (v < n && (matched_[v] || !has_free_neighbor(v))) ++v;
    // Bound: every remaining free vertex with a free neighbour can add at most half an edge.
    int free_with_edges = 0;
    for (Vertex w = v; w < n; ++w)
      if (!matched_[w] && has_free_neighbor(w)) ++free_with_edges;
    if (current_.size() + free_with_edges / 2 <= best_.size()) return;
    if (v == n) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    matched_[v] = 1;
    for (Vertex w : g_.neighbors(v)) {
      if (matched_[w]) continue;
      matched_[w] = 1;
      current_.emplace_back(v, w);
      recurse(v + 1);
      current_.pop_back();
      matched_[w] = 0;
    }
    // v stays unmatched.
    recurse(v + 1);
    matched_[v] = 0;
  }

  bool has_free_neighbor(Vertex v) const {
    for (Vertex w : g_.neighbors(v))
      if (!matched_[w]) return true;
    return false;
  }

  const Graph& g_;
  std::vector<char> matched_;
  EdgeSet current_;
  EdgeSet best_;
};

}  // namespace

EdgeSet maximum_matching(const Graph& g, const MatchingOptions& options) {
  if (g.vertex_count() > options.max_vertices) {
    throw CapExceeded("matching oracle limited to " + std::to_string(options.max_vertices) +
                      " vertices, got " + std::to_string(g.vertex_count()));
  }
  EdgeSet m = MatchingSearch(g).run();
  std::sort(m.begin(), m.end());
  return m;
}

long long opt_h2(const Graph& g, const MatchingOptions& options) {
  return g.edge_count() - static_cast<long long>(maximum_matching(g, options).size());
}

}  // namespace tfed
