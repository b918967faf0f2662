#include "tfed/split.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "tfed/errors.hpp"
#include "tfed/structure.hpp"

namespace tfed {

std::string to_string(SplitCase c) {
  return c == SplitCase::large_clique ? "large-clique" : "small-cover";
}

namespace {

std::vector<Vertex> degree_order(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> order(vertices.begin(), vertices.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

}  // namespace

SplitPartitionView recognize_split(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  const std::vector<Vertex> order = degree_order(g, all);
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  // A clique prefix of length i needs degree(order[i-1]) >= i-1.
  int longest = 0;
  for (int i = 1; i <= n; ++i) {
    if (g.degree(order[i - 1]) >= i - 1) longest = i;
  }
  for (int size = longest; size >= 0; --size) {
    bool ok = true;
    long long prefix_edges = 0;
    for (const Edge& e : g.edges()) {
      const bool in_u = rank[e.u] < size, in_v = rank[e.v] < size;
      if (!in_u && !in_v) {
        ok = false;
        break;
      }
      if (in_u && in_v) ++prefix_edges;
    }
    if (ok && prefix_edges == static_cast<long long>(size) * (size - 1) / 2) {
      SplitPartitionView view;
      view.clique_side.assign(order.begin(), order.begin() + size);
      view.independent_side.assign(order.begin() + size, order.end());
      std::sort(view.clique_side.begin(), view.clique_side.end());
      std::sort(view.independent_side.begin(), view.independent_side.end());
      return view;
    }
  }
  throw NotSplit("graph is not a split graph");
}

namespace {

/// Successive shortest paths (Bellman-Ford) on a small network; stops once
/// no augmenting path has negative cost, so it maximizes profit.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes) : adj_(nodes) {}

  int add_edge(int from, int to, long long cap, long long cost) {
    adj_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap, cost});
    adj_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0, -cost});
    return static_cast<int>(edges_.size()) - 2;
  }

  long long flow_on(int edge) const { return edges_[edge ^ 1].cap; }

  /// Returns the total cost of the flow (negative profit).
  long long run(int source, int sink) {
    const long long inf = std::numeric_limits<long long>::max() / 4;
    const int n = static_cast<int>(adj_.size());
    long long total = 0;
    while (true) {
      std::vector<long long> dist(n, inf);
      std::vector<int> via(n, -1);
      dist[source] = 0;
      for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (int u = 0; u < n; ++u) {
          if (dist[u] == inf) continue;
          for (int e : adj_[u]) {
            const Arc& a = edges_[e];
            if (a.cap > 0 && dist[u] + a.cost < dist[a.to]) {
              dist[a.to] = dist[u] + a.cost;
              via[a.to] = e;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (dist[sink] >= 0) break;
      long long push = inf;
      for (int v = sink; v != source; v = edges_[via[v] ^ 1].to) push = std::min(push, edges_[via[v]].cap);
      for (int v = sink; v != source; v = edges_[via[v] ^ 1].to) {
        edges_[via[v]].cap -= push;
        edges_[via[v] ^ 1].cap += push;
      }
      total += push * dist[sink];
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    long long cap;
    long long cost;
  };
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> edges_;
};

class CoverSolver {
 public:
  CoverSolver(const Graph& g, const VertexSet& cover, int h) : g_(g), cover_(cover), h_(h) {
    const VertexSet rest = complement(g.vertex_count(), cover);
    if (!is_independent(g, rest)) {
      throw MalformedInput("vertices outside the cover are not independent");
    }
    for (Vertex w : rest) degree_sum_ += g.degree(w);
    for (const TwinClass& cls : twin_classes(g, rest, cover, NeighborhoodMode::open).classes) {
      if (cls.signature.empty()) continue;
      classes_.push_back(cls);
    }
    position_.assign(g.vertex_count(), -1);
    for (std::size_t i = 0; i < cover.size(); ++i) position_[cover[i]] = static_cast<int>(i);
    block_of_.assign(cover.size(), -1);
    best_cost_ = static_cast<long long>(g.edge_count()) + 1;
  }

  PartitionSolution run() {
    place(0, 0, 0);
    return solution_from_partition(g_, best_partition_);
  }

 private:
  void place(std::size_t i, int blocks, long long cut) {
    if (cut >= best_cost_) return;
    if (i == cover_.size()) {
      evaluate(blocks, cut);
      return;
    }
    const Vertex v = cover_[i];
    std::vector<int> earlier_in_block(blocks + 1, 0);
    int earlier = 0;
    for (Vertex u : g_.neighbors(v)) {
      const int p = position_[u];
      if (p >= 0 && static_cast<std::size_t>(p) < i) {
        ++earlier;
        ++earlier_in_block[block_of_[p]];
      }
    }
    for (int b = 0; b <= blocks; ++b) {
      if (b < blocks && block_size_[b] >= h_) continue;
      if (b == blocks) block_size_.push_back(0);
      block_of_[i] = b;
      ++block_size_[b];
      place(i + 1, b == blocks ? blocks + 1 : blocks, cut + earlier - earlier_in_block[b]);
      --block_size_[b];
      if (b == blocks) block_size_.pop_back();
    }
    block_of_[i] = -1;
  }

  void evaluate(int blocks, long long cut) {
    const int classes = static_cast<int>(classes_.size());
    const int source = 0, sink = classes + blocks + 1;
    MinCostFlow flow(sink + 1);
    std::vector<std::vector<int>> edge_id(classes, std::vector<int>(blocks, -1));
    for (int c = 0; c < classes; ++c) {
      flow.add_edge(source, 1 + c, static_cast<long long>(classes_[c].members.size()), 0);
      std::vector<long long> saving(blocks, 0);
      for (Vertex u : classes_[c].signature) ++saving[block_of_[position_[u]]];
      for (int b = 0; b < blocks; ++b) {
        if (saving[b] > 0) edge_id[c][b] = flow.add_edge(1 + c, 1 + classes + b, h_, -saving[b]);
      }
    }
    for (int b = 0; b < blocks; ++b) flow.add_edge(1 + classes + b, sink, h_ - block_size_[b], 0);
    const long long total = cut + degree_sum_ + flow.run(source, sink);
    if (total >= best_cost_) return;
    best_cost_ = total;
    VertexPartition partition;
    partition.parts.assign(blocks, {});
    for (std::size_t i = 0; i < cover_.size(); ++i) partition.parts[block_of_[i]].push_back(cover_[i]);
    std::vector<char> placed(g_.vertex_count(), 0);
    for (Vertex v : cover_) placed[v] = 1;
    for (int c = 0; c < classes; ++c) {
      std::size_t next = 0;
      for (int b = 0; b < blocks; ++b) {
        if (edge_id[c][b] < 0) continue;
        for (long long f = flow.flow_on(edge_id[c][b]); f > 0; --f) {
          const Vertex w = classes_[c].members[next++];
          partition.parts[b].push_back(w);
          placed[w] = 1;
        }
      }
    }
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (!placed[v]) partition.parts.push_back({v});
    }
    partition.normalize();
    best_partition_ = std::move(partition);
  }

  const Graph& g_;
  const VertexSet& cover_;
  int h_;
  long long degree_sum_ = 0;
  std::vector<TwinClass> classes_;
  std::vector<int> position_;
  std::vector<int> block_of_;
  std::vector<int> block_size_;
  long long best_cost_ = 0;
  VertexPartition best_partition_;
};

}  // namespace

PartitionSolution solve_with_vertex_cover(const Graph& g, const VertexSet& cover, int h,
                                          int max_cover) {
  if (h < 1) throw MalformedInput("h must be positive");
  if (static_cast<int>(cover.size()) > max_cover) {
    throw CapExceeded("vertex cover larger than " + std::to_string(max_cover));
  }
  return CoverSolver(g, cover, h).run();
}

SplitResult solve_split(const Graph& g, long long k, int h) {
  if (h < 1) throw MalformedInput("h must be positive");
  const SplitPartitionView view = recognize_split(g);
  const long long clique = static_cast<long long>(view.clique_side.size());
  SplitResult result;
  if (clique > k + 1) {
    result.which = SplitCase::large_clique;
    // Any cut through V1 already costs at least |V1| - 1 > k.
    if (h < clique) return result;
    const std::vector<Vertex> order = degree_order(g, view.independent_side);
    const std::size_t room = static_cast<std::size_t>(h - clique);
    const std::size_t take = std::min(room, order.size());
    long long cost = 0;
    for (std::size_t i = take; i < order.size(); ++i) cost += g.degree(order[i]);
    if (cost > k) return result;
    VertexPartition partition;
    VertexSet big = view.clique_side;
    big.insert(big.end(), order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
    partition.parts.push_back(make_vertex_set(std::move(big)));
    for (std::size_t i = take; i < order.size(); ++i) partition.parts.push_back({order[i]});
    partition.normalize();
    result.yes = true;
    result.cost = cost;
    result.certificate = solution_from_partition(g, std::move(partition));
    return result;
  }
  result.which = SplitCase::small_cover;
  PartitionSolution solution = solve_with_vertex_cover(g, view.clique_side, h);
  result.cost = solution.cost;
  result.yes = solution.cost <= k;
  if (result.yes) result.certificate = std::move(solution);
  return result;
}

}  // namespace tfed
