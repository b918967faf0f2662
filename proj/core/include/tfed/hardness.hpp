#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tfed/decomposition.hpp"
#include "tfed/graph.hpp"

namespace tfed {

/// Items of sizes a_1..a_N into t bins of capacity C.
struct BinPackingInstance {
  std::vector<int> sizes;
  int bins = 1;
  int capacity = 1;

  long long total() const;
};

/// Family over the universe {0, .., universe-1}; is there a hitting set of size <= k?
struct HittingSetInstance {
  int universe = 0;
  std::vector<VertexSet> family;
  int k = 0;
};

/// Ordered key/value record written next to generated instances.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Exhaustive assignment search (largest items first, equal loads skipped).
/// Throws CapExceeded for more than 12 items.
bool binpack_decide(const BinPackingInstance& bp);

/// Is there a subset of at most k elements meeting every set? Throws
/// CapExceeded for universes above 16.
bool hitting_decide(const HittingSetInstance& hs);

enum class GadgetFamily { clique, path, star };

std::string to_string(GadgetFamily f);
GadgetFamily parse_gadget_family(const std::string& text);

struct GeneratedInstance {
  Instance instance;
  /// Deletion set whose removal leaves the gadgets.
  VertexSet X;
  /// Bags X ∪ (bag of a gadget decomposition), gadgets in identifier order.
  PathDecomposition decomposition;
  bool expected_yes = false;
  Metadata metadata;
};

/// Bin-packing construction: X = {v_1..v_t}, then gadgets A_1..A_N of
/// a_i vertices joined to all of X, then H_1..H_t of h' = h - C - 1
/// vertices joined to v_j; k = a(t-1), h = 10C + k.
GeneratedInstance gen_binpack(const BinPackingInstance& bp, GadgetFamily family);

/// Exact split-construction parameters (alpha defaults to N^100).
struct SplitParameters {
  using Big = boost::multiprecision::cpp_int;
  Big alpha;
  Big k;
  Big h;
  Big h_prime;
  Big vertex_count;
};

/// Throws AlphaTooSmall when an override is below 2N^2.
SplitParameters split_parameters(const BinPackingInstance& bp,
                                 std::optional<long long> alpha_override = std::nullopt);

/// Split construction: X = {v_1..v_t}, P_1..P_t (h' vertices each, P_j joined
/// to v_j), then per item A_i (alpha a_i vertices) and B_i (2 vertices).
/// X ∪ B is a clique, A_i is joined to B_i and to X. Throws InstanceTooLarge
/// when the graph has more than `max_vertices` vertices.
GeneratedInstance gen_split(const BinPackingInstance& bp,
                            std::optional<long long> alpha_override = std::nullopt,
                            long long max_vertices = 2'000'000);

struct GeneratedDiInstance {
  DiInstance instance;
  bool expected_yes = false;
  /// True when solve_arcs confirmed the expected answer.
  bool validated = false;
  Metadata metadata;
};

/// Hitting-set construction with h = n^c: per element v_x -> v'_x -> V_x
/// (h/n sinks), per set v_F -> v_x (x in F) and v_F -> V_F
/// (h + 1 - sum |V_x| sinks). Layout: per element v_x, v'_x, V_x; then per
/// set v_F, V_F. Throws ParameterTooSmall when n < 2, c < 2, some |V_F|
/// would be negative, h/n < 2|F| + 1 for some F (deleting (v_x, v'_x) would
/// not bring v_F down to h), or the bounded arc search disagrees with
/// hitting_decide.
GeneratedDiInstance gen_hitting_dag(const HittingSetInstance& hs, int c);

/// Smallest c in [2, max_c] accepted by gen_hitting_dag.
std::optional<int> smallest_valid_c(const HittingSetInstance& hs, int max_c = 8);

}  // namespace tfed
