#pragma once

#include <span>
#include <vector>

#include "tfed/graph.hpp"
#include "tfed/ip_model.hpp"
#include "tfed/oracle.hpp"
#include "tfed/structure.hpp"

namespace tfed {

/// Per-class vertex counts of one part: a[i] vertices taken from class i.
using TypeVector = std::vector<int>;

/// All a with 0 <= a_i <= class_sizes[i] and 1 <= sum a_i <= h, in
/// lexicographic order.
std::vector<TypeVector> enumerate_types(std::span<const int> class_sizes, int h);

/// The type-count program of a neighborhood-diversity partition together
/// with the data needed to turn an assignment back into a partition.
struct NdModel {
  IntegerProgramModel model;
  TwinClassification classes;
  std::vector<TypeVector> types;  // variable j counts parts of type types[j]
  std::vector<long long> kept;    // edges inside one part of type types[j]
  std::vector<char> clique_class;
  std::vector<std::vector<char>> joined;  // joined[i][j]: classes i, j complete to each other
};

/// Builds min |E| - sum_a kept(a) x_a subject to sum_a a_i x_a = |P_i|.
/// Throws InvalidPartition when `classes` are not twin classes of g.
NdModel build_nd_model(const Graph& g, const TwinClassification& classes, int h);

/// Parts for an assignment: each part of type a takes the next a_i unused
/// vertices of class i in identifier order.
PartitionSolution materialize_nd(const Graph& g, const NdModel& nd, std::span<const long long> x);

struct NdResult {
  bool yes = false;
  long long cost = 0;
  PartitionSolution solution;
  int t = 0;
  long long nodes = 0;
};

/// Exact optimum via the type-count program; yes iff the optimum is <= k.
NdResult solve_nd(const Graph& g, long long k, int h);

}  // namespace tfed
