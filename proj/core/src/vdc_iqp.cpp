#include "tfed/vdc_iqp.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>

#include "tfed/errors.hpp"
#include "tfed/oracle.hpp"
#include "tfed/preprocess.hpp"
#include "tfed/structure.hpp"

namespace tfed {

long long vdc_part_limit(int ell) {
  if (ell >= 25) return INT_MAX;
  const long long value = (1LL << (ell + 1)) * (ell + 1) + 2LL * ell + 1;
  return std::min<long long>(value, INT_MAX);
}

namespace {

void check_coefficients(const IntegerProgramModel& model) {
  for (const auto& c : model.constraints) {
    for (const auto& t : c.terms) {
      if (t.coef < -1 || t.coef > 1) throw std::logic_error("constraint coefficient outside [-1,1]");
    }
  }
  for (const auto& t : model.objective_linear) {
    if (t.coef < 0 || t.coef > 1) throw std::logic_error("objective coefficient outside {0,1}");
  }
  for (const auto& q : model.objective_quadratic) {
    if (q.coef < 0 || q.coef > 1) throw std::logic_error("objective coefficient outside {0,1}");
  }
}

}  // namespace

VdcModel build_vdc_model(const Graph& g, std::span<const Vertex> X, PartGuess guess, int h) {
  if (h < 1) throw MalformedInput("h must be positive");
  if (guess.p < 1 || guess.s < 0 || guess.s > guess.p) throw MalformedInput("invalid part guess");
  VdcModel vm;
  vm.guess = guess;
  vm.X = make_vertex_set({X.begin(), X.end()});
  const VertexSet C = complement(g.vertex_count(), vm.X);
  if (!is_clique(g, C)) throw NotCliqueComplement("g - X is not a clique");
  for (const TwinClass& cls : twin_classes(g, C, vm.X, NeighborhoodMode::open).classes) {
    vm.classes.push_back(cls.members);
    vm.signatures.push_back(cls.signature);
  }

  const int p = guess.p;
  const int ell = static_cast<int>(vm.X.size());
  const int classes = static_cast<int>(vm.classes.size());
  const int lower = (h + 1) / 2;
  IntegerProgramModel& model = vm.model;
  auto y = [&](int r, int u) { return r * ell + u; };
  for (int r = 0; r < p; ++r) {
    for (int u = 0; u < ell; ++u) {
      model.add_variable("y_" + std::to_string(r + 1) + "_" + std::to_string(vm.X[u]), 0, 1);
    }
  }
  vm.first_x = p * ell;
  auto x = [&](int r, int c) { return vm.first_x + r * classes + c; };
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < classes; ++c) {
      const long long cap = std::min<long long>(vm.classes[c].size(), h);
      model.add_variable("x_" + std::to_string(r + 1) + "_" + std::to_string(c + 1), 0, cap);
    }
  }
  const int first_c = vm.first_x + p * classes;
  const int first_z = first_c + p;
  const int first_t = first_z + p;
  for (int r = 0; r < p; ++r) {
    model.add_variable("c_" + std::to_string(r + 1), 0,
                       std::min<long long>(static_cast<long long>(C.size()), h));
  }
  for (int r = 0; r < p; ++r) {
    model.add_variable("z_" + std::to_string(r + 1), 0, std::min(ell, h));
  }
  for (int r = 0; r < p; ++r) model.add_variable("t_" + std::to_string(r + 1), 0, h);

  for (int c = 0; c < classes; ++c) {
    std::vector<LinearTerm> row;
    for (int r = 0; r < p; ++r) row.push_back({x(r, c), 1});
    model.add_constraint("cover_" + std::to_string(c + 1), std::move(row), Relation::equal,
                         static_cast<long long>(vm.classes[c].size()));
  }
  for (int u = 0; u < ell; ++u) {
    std::vector<LinearTerm> row;
    for (int r = 0; r < p; ++r) row.push_back({y(r, u), 1});
    model.add_constraint("assign_" + std::to_string(vm.X[u]), std::move(row), Relation::equal, 1);
  }
  for (int r = 0; r < p; ++r) {
    const std::string id = std::to_string(r + 1);
    std::vector<LinearTerm> clique_row{{first_c + r, 1}};
    for (int c = 0; c < classes; ++c) clique_row.push_back({x(r, c), -1});
    model.add_constraint("clique_" + id, std::move(clique_row), Relation::equal, 0);
    std::vector<LinearTerm> x_row{{first_z + r, 1}};
    for (int u = 0; u < ell; ++u) x_row.push_back({y(r, u), -1});
    model.add_constraint("deletion_" + id, std::move(x_row), Relation::equal, 0);
    model.add_constraint("total_" + id, {{first_t + r, 1}, {first_c + r, -1}, {first_z + r, -1}},
                         Relation::equal, 0);
    model.add_constraint("upper_" + id, {{first_t + r, 1}}, Relation::less_equal, h);
    if (r + 1 != guess.s) {
      model.add_constraint("lower_" + id, {{first_t + r, 1}}, Relation::greater_equal, lower);
    }
  }
  // Parts other than the small one are interchangeable: order them by size.
  int previous = -1;
  for (int r = 0; r < p; ++r) {
    if (r + 1 == guess.s) continue;
    if (previous >= 0) {
      model.add_constraint("order_" + std::to_string(previous + 1) + "_" + std::to_string(r + 1),
                           {{first_t + previous, 1}, {first_t + r, -1}},
                           Relation::greater_equal, 0);
    }
    previous = r;
  }

  // cut_C: the clique edges between parts.
  for (int r = 0; r < p; ++r) {
    for (int q = r + 1; q < p; ++q) model.objective_quadratic.push_back({first_c + r, first_c + q, 1});
  }
  // cut_XC: u in X against class vertices adjacent to u in another part.
  for (int u = 0; u < ell; ++u) {
    for (int c = 0; c < classes; ++c) {
      if (!std::binary_search(vm.signatures[c].begin(), vm.signatures[c].end(), vm.X[u])) continue;
      for (int r = 0; r < p; ++r) {
        for (int q = 0; q < p; ++q) {
          if (r != q) model.objective_quadratic.push_back({x(r, c), y(q, u), 1});
        }
      }
    }
  }
  // cut_X: edges inside X whose endpoints are in different parts.
  for (int u = 0; u < ell; ++u) {
    for (int v = u + 1; v < ell; ++v) {
      if (!g.adjacent(vm.X[u], vm.X[v])) continue;
      for (int r = 0; r < p; ++r) {
        for (int q = 0; q < p; ++q) {
          if (r != q) model.objective_quadratic.push_back({y(r, u), y(q, v), 1});
        }
      }
    }
  }
  check_coefficients(model);
  return vm;
}

PartitionSolution materialize_vdc(const Graph& g, const VdcModel& vm,
                                  std::span<const long long> values) {
  const int p = vm.guess.p;
  const int ell = static_cast<int>(vm.X.size());
  const int classes = static_cast<int>(vm.classes.size());
  std::vector<std::size_t> next(classes, 0);
  VertexPartition partition;
  for (int r = 0; r < p; ++r) {
    VertexSet part;
    for (int u = 0; u < ell; ++u) {
      if (values[r * ell + u] == 1) part.push_back(vm.X[u]);
    }
    for (int c = 0; c < classes; ++c) {
      for (long long i = 0; i < values[vm.first_x + r * classes + c]; ++i) {
        part.push_back(vm.classes[c][next[c]++]);
      }
    }
    if (!part.empty()) partition.parts.push_back(make_vertex_set(std::move(part)));
  }
  return solution_from_partition(g, std::move(partition));
}

VdcResult solve_vdc(const Graph& g, std::span<const Vertex> X, long long k, int h) {
  const VertexSet x_set = make_vertex_set({X.begin(), X.end()});
  if (!is_clique(g, complement(g.vertex_count(), x_set))) {
    throw NotCliqueComplement("g - X is not a clique");
  }
  VdcResult result;
  if (g.vertex_count() == 0) {
    result.yes = k >= 0;
    return result;
  }
  // The part-count bound needs every twin class below the rule threshold.
  const auto reduced = rule1_apply(g, x_set, LLONG_MAX / 4, h);
  if (!reduced) throw std::logic_error("twin-class removal failed on an unbounded budget");
  const Graph& rg = reduced->graph;
  const int n = rg.vertex_count();
  const long long p_max =
      std::min<long long>(vdc_part_limit(static_cast<int>(reduced->X.size())), std::max(n, 1));
  std::optional<long long> best;
  PartitionSolution reduced_solution;
  if (n == 0) {
    best = 0;
  }
  for (int p = 1; n > 0 && p <= p_max; ++p) {
    for (int s = 0; s <= p; ++s) {
      const PartGuess guess{p, s};
      const VdcModel vm = build_vdc_model(rg, reduced->X, guess, h);
      ++result.guesses_tried;
      IpOptions options;
      options.cutoff = best;
      const auto solved = solve_ip(vm.model, options);
      if (!solved) continue;
      result.nodes += solved->nodes;
      best = solved->objective;
      result.best_guess = guess;
      reduced_solution = materialize_vdc(rg, vm, solved->values);
      if (reduced_solution.cost != solved->objective) {
        throw std::logic_error("materialized partition disagrees with the program objective");
      }
    }
  }
  if (!best) throw std::logic_error("no part guess admits a feasible assignment");

  VertexPartition partition;
  for (const auto& part : reduced_solution.partition.parts) {
    VertexSet mapped;
    for (Vertex v : part) mapped.push_back(reduced->original_id[v]);
    partition.parts.push_back(make_vertex_set(std::move(mapped)));
  }
  for (const auto& record : reduced->trace) partition.parts.push_back(record.removed);
  partition.normalize();
  result.solution = solution_from_partition(g, std::move(partition));
  result.cost = *best + reduced->total_delta();
  if (result.solution.cost != result.cost) {
    throw std::logic_error("lifted partition disagrees with the reduced optimum plus removal costs");
  }
  result.yes = result.cost <= k;
  return result;
}

}  // namespace tfed
