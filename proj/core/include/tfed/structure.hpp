#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "tfed/graph.hpp"

namespace tfed {

/// Connected components, ordered by smallest member.
VertexPartition connected_components(const Graph& g);

/// Components of g restricted to the vertices in `within` (edges leaving
/// `within` are ignored).
VertexPartition connected_components(const Graph& g, std::span<const Vertex> within);

int max_component_size(const Graph& g);

/// True iff every component of g has at most h vertices.
bool components_bounded(const Graph& g, int h);

/// True iff every component of g minus `deleted` has at most h vertices.
bool deletion_feasible(const Graph& g, std::span<const Edge> deleted, int h);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);
bool is_independent(const Graph& g, std::span<const Vertex> vertices);

/// g is a disjoint union of cliques.
bool is_cluster_graph(const Graph& g);

/// Vertices not in `removed`, sorted.
VertexSet complement(int n, std::span<const Vertex> removed);

enum class NeighborhoodMode { open, closed };

enum class TwinKind { true_twins, false_twins, mixed };

struct TwinClass {
  VertexSet members;
  /// N(v) ∩ domain (open) or N[v] ∩ domain (closed) shared by every member.
  VertexSet signature;
  TwinKind kind = TwinKind::true_twins;
};

/// Classes ordered by smallest member.
struct TwinClassification {
  std::vector<TwinClass> classes;

  VertexPartition partition() const;
  std::size_t size() const noexcept { return classes.size(); }
};

/// Groups the vertices of `restrict_to` by their neighborhood inside
/// `signature_domain`, by partition refinement with one pivot per domain
/// vertex. Runs in time linear in the edges incident to the domain.
TwinClassification twin_classes(const Graph& g, std::span<const Vertex> restrict_to,
                                std::span<const Vertex> signature_domain,
                                NeighborhoodMode mode = NeighborhoodMode::open);

/// Minimum partition into neighborhood types (true and false twins merged).
/// The signature of each class is the neighborhood of a member outside the class.
struct NeighborhoodDiversity {
  int t = 0;
  TwinClassification classes;
};

NeighborhoodDiversity neighborhood_diversity(const Graph& g);

/// Some induced path a-b-c (a, c non-adjacent), smallest middle vertex first.
std::optional<std::array<Vertex, 3>> find_induced_p3(const Graph& g);

/// A minimum set S with |S| <= budget and g - S a cluster graph, or nullopt.
/// Three-way branching on induced P3s with iterative deepening.
std::optional<VertexSet> find_cluster_deletion_set(const Graph& g, int budget);

}  // namespace tfed
