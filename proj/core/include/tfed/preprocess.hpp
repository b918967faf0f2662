#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfed/graph.hpp"

namespace tfed {

enum class Answer { no, yes, unknown };

std::string to_string(Answer a);

/// One applied reduction step. Vertices are identifiers of the original graph.
struct RuleRecord {
  std::string rule;
  VertexSet removed;
  long long budget_delta = 0;
};

/// Result of safe preprocessing. `original_id[v]` maps a vertex of `graph`
/// back to the input graph; `X` is the deletion set in new identifiers.
struct ReducedInstance {
  Graph graph;
  long long k = 0;
  int h = 1;
  VertexSet X;
  std::vector<Vertex> original_id;
  std::vector<RuleRecord> trace;

  long long total_delta() const;
};

/// Removes every component with at most h vertices; the optimum is unchanged.
Graph drop_small_components(const Graph& g, int h);

/// Same, also reporting the kept vertices (sorted, original identifiers).
Graph drop_small_components(const Graph& g, int h, std::vector<Vertex>& kept);

struct TrivialOptions {
  int matching_cap = 20;
};

/// Decides the cases that need no search: h = 1 (delete every edge), h = 2
/// (maximum matching, within the cap) and h >= largest component.
Answer trivial_answer(const Graph& g, long long k, int h, const TrivialOptions& options = {});

/// Applies the twin-class reduction to exhaustion. g - X must be a cluster
/// graph (MalformedInput otherwise). Returns nullopt for a no-instance
/// (budget driven negative).
///
/// For a component C of g - X and a class P of C (vertices with equal
/// neighbourhood in X) with |P| >= |X|(h-1) + h, the h lowest-identifier
/// vertices of P are removed and k drops by h * (|C| - h + |N_X(P)|). Sizes
/// are recomputed after every removal.
std::optional<ReducedInstance> rule1_apply(const Graph& g, std::span<const Vertex> X,
                                           long long k, int h);

/// Counting guard: after dropping small components every remaining component
/// needs at least one deletion and holds at most h vertices per deletion, so
/// more than 2kh vertices means no. Returns Answer::no or Answer::unknown.
Answer yes_instance_vertex_bound(const Graph& g, long long k, int h);

}  // namespace tfed
