#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tfed/decomposition.hpp"
#include "tfed/graph.hpp"

namespace tfed::testing {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
bool coin(Rng& rng, double p);

Graph random_graph(Rng& rng, int n, double p);

/// One representative per isomorphism class, all graphs on 0..max_n vertices.
std::vector<Graph> graphs_up_to_isomorphism(int max_n);

/// costs[h] = fewest deleted edges leaving components of size <= h, for
/// h = 0..n (costs[0] is unused), computed over all kept-edge subsets.
std::vector<long long> brute_force_costs(const Graph& g);
long long brute_force_opt(const Graph& g, int h);

/// Size of a maximum matching by exhaustive edge-subset search.
int brute_force_matching_size(const Graph& g);

/// Path decomposition from the identity order: bag i holds i and every
/// earlier vertex with a neighbour at position >= i.
PathDecomposition linear_decomposition(const Graph& g);

/// Graph whose vertices outside X induce a disjoint union of cliques.
struct ModulatedGraph {
  Graph graph;
  VertexSet X;
};
ModulatedGraph random_cluster_plus_x(Rng& rng, int max_n, int max_x);
/// Same, with the complement of X a single clique.
ModulatedGraph random_clique_plus_x(Rng& rng, int max_n, int max_x);

std::vector<Interval> random_intervals(Rng& rng, int n, int span, int max_length);

/// Split graph on n vertices with a clique side of the given size.
Graph random_split_graph(Rng& rng, int n, int clique_size, double p);

/// Graph with at most t twin classes (each a clique or independent set,
/// pairs fully joined or not).
Graph random_low_diversity_graph(Rng& rng, int n, int t);

bool is_feasible_deletion(const Graph& g, const EdgeSet& deleted, int h);

std::string read_text(const std::string& path);

}  // namespace tfed::testing
