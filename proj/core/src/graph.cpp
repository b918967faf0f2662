#include "tfed/graph.hpp"

#include <algorithm>
#include <string>

#include "tfed/errors.hpp"

namespace tfed {

namespace {

void check_endpoint(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw MalformedInput("vertex " + std::to_string(v) + " out of range [0," +
                         std::to_string(n) + ")");
  }
}

}  // namespace

Graph::Graph(int vertex_count) : adjacency_(vertex_count < 0 ? 0 : vertex_count) {
  if (vertex_count < 0) throw MalformedInput("negative vertex count");
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    check_endpoint(vertex_count, e.u);
    check_endpoint(vertex_count, e.v);
    if (e.u == e.v) throw MalformedInput("self-loop at vertex " + std::to_string(e.u));
    edges_.push_back(Edge(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw MalformedInput("duplicate edge");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph Graph::complete(int n) {
  EdgeSet edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph Graph::path(int n) {
  EdgeSet edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph Graph::cycle(int n) {
  EdgeSet edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  if (n >= 3) edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph Graph::star(int leaves) {
  EdgeSet edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count()) {
    throw MalformedInput("label count does not match vertex count");
  }
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_endpoint(vertex_count(), keep[i]);
    index[keep[i]] = static_cast<int>(i);
  }
  EdgeSet edges;
  for (const Edge& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.emplace_back(index[e.u], index[e.v]);
  }
  Graph result(static_cast<int>(keep.size()), edges);
  if (!labels_.empty()) {
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (Vertex v : keep) labels.push_back(labels_[v]);
    result.labels_ = std::move(labels);
  }
  return result;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  EdgeSet drop(removed.begin(), removed.end());
  for (Edge& e : drop) e = Edge(e.u, e.v);
  std::sort(drop.begin(), drop.end());
  EdgeSet kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  Graph result(vertex_count(), kept);
  result.labels_ = labels_;
  return result;
}

Graph Graph::disjoint_union(const Graph& other) const {
  EdgeSet edges = edges_;
  const int offset = vertex_count();
  for (const Edge& e : other.edges()) edges.emplace_back(e.u + offset, e.v + offset);
  return Graph(offset + other.vertex_count(), edges);
}

DiGraph::DiGraph(int vertex_count) : out_(vertex_count < 0 ? 0 : vertex_count) {
  if (vertex_count < 0) throw MalformedInput("negative vertex count");
}

DiGraph::DiGraph(int vertex_count, std::span<const Arc> arcs) : DiGraph(vertex_count) {
  arcs_.assign(arcs.begin(), arcs.end());
  for (const Arc& a : arcs_) {
    check_endpoint(vertex_count, a.tail);
    check_endpoint(vertex_count, a.head);
    if (a.tail == a.head) throw MalformedInput("self-loop at vertex " + std::to_string(a.tail));
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw MalformedInput("duplicate arc");
  }
  for (const Arc& a : arcs_) out_[a.tail].push_back(a.head);
}

bool DiGraph::has_arc(Vertex tail, Vertex head) const {
  const auto& list = out_[tail];
  return std::binary_search(list.begin(), list.end(), head);
}

DiGraph DiGraph::without_arcs(std::span<const Arc> removed) const {
  std::vector<Arc> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  std::vector<Arc> kept;
  kept.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    if (!std::binary_search(drop.begin(), drop.end(), a)) kept.push_back(a);
  }
  return DiGraph(vertex_count(), kept);
}

DiGraph DiGraph::bidirected(const Graph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.edges().size());
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return DiGraph(g.vertex_count(), arcs);
}

void VertexPartition::normalize() {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty()) return a.size() < b.size();
    return a.front() < b.front();
  });
}

std::vector<int> VertexPartition::part_of(int n) const {
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) {
      if (v >= 0 && v < n) owner[v] = static_cast<int>(i);
    }
  }
  return owner;
}

bool VertexPartition::is_partition_of(std::span<const Vertex> universe) const {
  std::vector<Vertex> all;
  for (const auto& part : parts) {
    if (part.empty()) return false;
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  std::vector<Vertex> expected(universe.begin(), universe.end());
  std::sort(expected.begin(), expected.end());
  return all == expected;
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

EdgeSet crossing_edges(const Graph& g, const VertexPartition& partition) {
  const auto owner = partition.part_of(g.vertex_count());
  EdgeSet result;
  for (const Edge& e : g.edges()) {
    if (owner[e.u] != owner[e.v]) result.push_back(e);
  }
  return result;
}

}  // namespace tfed
