#pragma once

#include <span>
#include <vector>

#include "tfed/graph.hpp"
#include "tfed/ip_model.hpp"
#include "tfed/oracle.hpp"

namespace tfed {

/// p parts; part s (1-based) may be smaller than ceil(h/2), s = 0 when none is.
struct PartGuess {
  int p = 1;
  int s = 0;

  friend bool operator==(const PartGuess&, const PartGuess&) = default;
};

/// 2^(l+1)(l+1) + 2l + 1, saturating at INT_MAX.
long long vdc_part_limit(int ell);

/// Quadratic program for one guess when g - X is a clique C.
///
/// Variables, in order: y_{r,u} (u in X goes to part r), x_{r,S} (vertices
/// of class P_S in part r), then c_r, z_r and t_r (clique, X and total
/// vertices of part r). Classes P_S group C by their neighbourhood S in X.
struct VdcModel {
  IntegerProgramModel model;
  PartGuess guess;
  VertexSet X;
  std::vector<VertexSet> classes;     // members of P_S, ordered by smallest member
  std::vector<VertexSet> signatures;  // S for each class
  int first_x = 0;                    // index of x_{1,P_1}
};

/// Throws NotCliqueComplement when g - X is not a clique.
VdcModel build_vdc_model(const Graph& g, std::span<const Vertex> X, PartGuess guess, int h);

/// Partition encoded by a feasible assignment of `vm`.
PartitionSolution materialize_vdc(const Graph& g, const VdcModel& vm,
                                  std::span<const long long> values);

struct VdcResult {
  bool yes = false;
  long long cost = 0;
  PartitionSolution solution;
  PartGuess best_guess;
  long long guesses_tried = 0;
  long long nodes = 0;
};

/// Exhausts twin-class removal, then takes the minimum over p = 1..min(f(|X|), n)
/// and s = 0..p of the program optimum on the reduced graph. The returned
/// solution is lifted back to g (removed groups become parts).
/// Throws NotCliqueComplement when g - X is not a clique.
VdcResult solve_vdc(const Graph& g, std::span<const Vertex> X, long long k, int h);

}  // namespace tfed
