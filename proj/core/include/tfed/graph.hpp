#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tfed {

/// Dense vertex identifier in [0, n).
using Vertex = int;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/// Unordered edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeSet = std::vector<Edge>;

/// Ordered pair (tail, head).
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Edges are kept sorted and adjacency lists are sorted, so iteration order
/// is deterministic and `adjacent` is a binary search.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  /// Throws MalformedInput on self-loops, duplicates or out-of-range endpoints.
  Graph(int vertex_count, std::span<const Edge> edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int leaves);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const EdgeSet& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const;

  /// Cosmetic labels; empty when none were given.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  /// Subgraph induced by `keep` (sorted); vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const;

  /// Same vertex set, listed edges removed (missing edges are ignored).
  Graph without_edges(std::span<const Edge> removed) const;

  /// Disjoint union, `other` relabelled to start at vertex_count().
  Graph disjoint_union(const Graph& other) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  EdgeSet edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
};

/// Simple directed graph on vertices 0..n-1 (no loops, no parallel arcs).
class DiGraph {
 public:
  DiGraph() = default;
  explicit DiGraph(int vertex_count);
  DiGraph(int vertex_count, std::span<const Arc> arcs);

  int vertex_count() const noexcept { return static_cast<int>(out_.size()); }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::span<const Vertex> successors(Vertex v) const { return out_[v]; }
  bool has_arc(Vertex tail, Vertex head) const;

  DiGraph without_arcs(std::span<const Arc> removed) const;

  /// Each undirected edge becomes two opposite arcs.
  static DiGraph bidirected(const Graph& g);

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
};

/// Disjoint vertex sets covering a universe. Parts are sorted internally and
/// ordered by their smallest member.
struct VertexPartition {
  std::vector<VertexSet> parts;

  /// Sort members and order parts by smallest member.
  void normalize();
  std::size_t size() const noexcept { return parts.size(); }
  bool empty() const noexcept { return parts.empty(); }

  /// Map vertex -> part index for a universe of `n` vertices (-1 if uncovered).
  std::vector<int> part_of(int n) const;

  /// True iff parts are nonempty, pairwise disjoint and cover exactly `universe`.
  bool is_partition_of(std::span<const Vertex> universe) const;

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

/// An instance of the undirected problem: delete at most k edges of `graph`
/// so that every connected component has at most h vertices.
struct Instance {
  Graph graph;
  long long k = 0;
  int h = 1;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Directed variant: delete at most k arcs so that no vertex reaches more
/// than h vertices (counting itself).
struct DiInstance {
  DiGraph digraph;
  long long k = 0;
  int h = 1;

  friend bool operator==(const DiInstance&, const DiInstance&) = default;
};

/// Sorted copy without duplicates.
VertexSet make_vertex_set(std::vector<Vertex> vertices);

/// Edges of g with endpoints in different parts.
EdgeSet crossing_edges(const Graph& g, const VertexPartition& partition);

}  // namespace tfed
