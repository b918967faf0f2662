#include "tfed/nd_ilp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tfed/errors.hpp"

namespace tfed {

std::vector<TypeVector> enumerate_types(std::span<const int> class_sizes, int h) {
  std::vector<TypeVector> out;
  const int t = static_cast<int>(class_sizes.size());
  TypeVector a(t, 0);
  auto rec = [&](auto&& self, int i, int sum) -> void {
    if (i == t) {
      if (sum >= 1) out.push_back(a);
      return;
    }
    const int top = std::min(class_sizes[i], h - sum);
    for (int v = 0; v <= top; ++v) {
      a[i] = v;
      self(self, i + 1, sum + v);
    }
    a[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

namespace {

long long binomial_capped(int n, int r, long long cap) {
  long long result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

std::string type_name(const TypeVector& a) {
  std::string name = "x";
  for (int v : a) name += "_" + std::to_string(v);
  return name;
}

}  // namespace

NdModel build_nd_model(const Graph& g, const TwinClassification& classes, int h) {
  const int n = g.vertex_count();
  if (h < 1) throw MalformedInput("h must be positive");
  std::vector<Vertex> universe(n);
  for (int v = 0; v < n; ++v) universe[v] = v;
  if (!classes.partition().is_partition_of(universe)) {
    throw InvalidPartition("classes do not partition the vertex set");
  }
  const int t = static_cast<int>(classes.size());
  NdModel nd;
  nd.classes = classes;
  nd.clique_class.assign(t, 0);
  nd.joined.assign(t, std::vector<char>(t, 0));
  for (int i = 0; i < t; ++i) {
    const auto& members = classes.classes[i].members;
    if (is_clique(g, members)) {
      nd.clique_class[i] = 1;
    } else if (!is_independent(g, members)) {
      throw InvalidPartition("class " + std::to_string(i) + " is neither a clique nor independent");
    }
  }
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      long long edges = 0;
      for (Vertex u : classes.classes[i].members) {
        for (Vertex v : classes.classes[j].members) edges += g.adjacent(u, v) ? 1 : 0;
      }
      const long long full = static_cast<long long>(classes.classes[i].members.size()) *
                             static_cast<long long>(classes.classes[j].members.size());
      if (edges != 0 && edges != full) {
        throw InvalidPartition("classes " + std::to_string(i) + " and " + std::to_string(j) +
                               " are not twin classes");
      }
      nd.joined[i][j] = nd.joined[j][i] = edges == full ? 1 : 0;
    }
  }

  std::vector<int> sizes(t);
  for (int i = 0; i < t; ++i) sizes[i] = static_cast<int>(classes.classes[i].members.size());
  nd.types = enumerate_types(sizes, h);
  if (static_cast<long long>(nd.types.size()) > binomial_capped(h + t, t, 1LL << 40)) {
    throw std::logic_error("type count exceeds C(h+t, t)");
  }

  IntegerProgramModel& model = nd.model;
  model.objective_constant = g.edge_count();
  for (const TypeVector& a : nd.types) {
    long long kept = 0;
    long long upper = n;
    for (int i = 0; i < t; ++i) {
      if (a[i] == 0) continue;
      if (nd.clique_class[i]) kept += static_cast<long long>(a[i]) * (a[i] - 1) / 2;
      for (int j = i + 1; j < t; ++j) {
        if (nd.joined[i][j]) kept += static_cast<long long>(a[i]) * a[j];
      }
      upper = std::min<long long>(upper, sizes[i] / a[i]);
    }
    nd.kept.push_back(kept);
    const int var = model.add_variable(type_name(a), 0, upper);
    if (kept != 0) model.objective_linear.push_back({var, -kept});
  }
  for (int i = 0; i < t; ++i) {
    std::vector<LinearTerm> row;
    for (std::size_t j = 0; j < nd.types.size(); ++j) {
      if (nd.types[j][i] > 0) row.push_back({static_cast<int>(j), nd.types[j][i]});
    }
    model.add_constraint("class_" + std::to_string(i), std::move(row), Relation::equal, sizes[i]);
  }
  return nd;
}

PartitionSolution materialize_nd(const Graph& g, const NdModel& nd, std::span<const long long> x) {
  const int t = static_cast<int>(nd.classes.size());
  std::vector<std::size_t> next(t, 0);
  VertexPartition partition;
  for (std::size_t j = 0; j < nd.types.size(); ++j) {
    for (long long copy = 0; copy < x[j]; ++copy) {
      VertexSet part;
      for (int i = 0; i < t; ++i) {
        const auto& members = nd.classes.classes[i].members;
        for (int c = 0; c < nd.types[j][i]; ++c) {
          if (next[i] >= members.size()) throw InvalidPartition("assignment overuses a class");
          part.push_back(members[next[i]++]);
        }
      }
      partition.parts.push_back(make_vertex_set(std::move(part)));
    }
  }
  for (int i = 0; i < t; ++i) {
    if (next[i] != nd.classes.classes[i].members.size()) {
      throw InvalidPartition("assignment leaves class vertices uncovered");
    }
  }
  return solution_from_partition(g, std::move(partition));
}

NdResult solve_nd(const Graph& g, long long k, int h) {
  NdResult result;
  const NeighborhoodDiversity nd_info = neighborhood_diversity(g);
  result.t = nd_info.t;
  if (g.vertex_count() == 0) {
    result.yes = k >= 0;
    return result;
  }
  const NdModel nd = build_nd_model(g, nd_info.classes, h);
  const auto solved = solve_ip(nd.model);
  if (!solved) throw std::logic_error("type-count program has no feasible assignment");
  result.nodes = solved->nodes;
  result.solution = materialize_nd(g, nd, solved->values);
  result.cost = result.solution.cost;
  if (result.cost != solved->objective) {
    throw std::logic_error("materialized partition disagrees with the program objective");
  }
  result.yes = result.cost <= k;
  return result;
}

}  // namespace tfed
