#include "tfed/structure.hpp"

#include <algorithm>
#include <numeric>

namespace tfed {

namespace {

/// Components over vertices with alive[v] set.
VertexPartition components_masked(const Graph& g, const std::vector<char>& alive) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  VertexPartition result;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (!alive[root] || seen[root]) continue;
    VertexSet part;
    stack.push_back(root);
    seen[root] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (alive[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    result.parts.push_back(std::move(part));
  }
  return result;
}

std::optional<std::array<Vertex, 3>> find_p3_masked(const Graph& g,
                                                    const std::vector<char>& alive) {
  for (Vertex b = 0; b < g.vertex_count(); ++b) {
    if (!alive[b]) continue;
    const auto nb = g.neighbors(b);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (!alive[nb[i]]) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!alive[nb[j]]) continue;
        if (!g.adjacent(nb[i], nb[j])) return std::array<Vertex, 3>{nb[i], b, nb[j]};
      }
    }
  }
  return std::nullopt;
}

bool cluster_branch(const Graph& g, std::vector<char>& alive, int budget,
                    std::vector<Vertex>& chosen) {
  const auto p3 = find_p3_masked(g, alive);
  if (!p3) return true;
  if (budget == 0) return false;
  std::array<Vertex, 3> order = *p3;
  std::sort(order.begin(), order.end());
  for (Vertex v : order) {
    alive[v] = 0;
    chosen.push_back(v);
    if (cluster_branch(g, alive, budget - 1, chosen)) return true;
    chosen.pop_back();
    alive[v] = 1;
  }
  return false;
}

}  // namespace

VertexPartition connected_components(const Graph& g) {
  return components_masked(g, std::vector<char>(g.vertex_count(), 1));
}

VertexPartition connected_components(const Graph& g, std::span<const Vertex> within) {
  std::vector<char> alive(g.vertex_count(), 0);
  for (Vertex v : within) alive[v] = 1;
  return components_masked(g, alive);
}

int max_component_size(const Graph& g) {
  int best = 0;
  for (const auto& part : connected_components(g).parts) {
    best = std::max(best, static_cast<int>(part.size()));
  }
  return best;
}

bool components_bounded(const Graph& g, int h) { return max_component_size(g) <= h; }

bool deletion_feasible(const Graph& g, std::span<const Edge> deleted, int h) {
  return components_bounded(g.without_edges(deleted), h);
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool is_cluster_graph(const Graph& g) { return !find_induced_p3(g).has_value(); }

VertexSet complement(int n, std::span<const Vertex> removed) {
  std::vector<char> drop(n, 0);
  for (Vertex v : removed) drop[v] = 1;
  VertexSet rest;
  for (Vertex v = 0; v < n; ++v)
    if (!drop[v]) rest.push_back(v);
  return rest;
}

VertexPartition TwinClassification::partition() const {
  VertexPartition p;
  for (const auto& c : classes) p.parts.push_back(c.members);
  return p;
}

TwinClassification twin_classes(const Graph& g, std::span<const Vertex> restrict_to,
                                std::span<const Vertex> signature_domain,
                                NeighborhoodMode mode) {
  TwinClassification result;
  if (restrict_to.empty()) return result;

  // Refinement: class id per vertex, split on each pivot's neighborhood.
  const int n = g.vertex_count();
  std::vector<int> cls(n, -1);
  for (Vertex v : restrict_to) cls[v] = 0;
  int class_count = 1;
  std::vector<int> class_size{
      static_cast<int>(make_vertex_set({restrict_to.begin(), restrict_to.end()}).size())};
  // Per-class scratch, reset only for touched classes.
  std::vector<int> marked_count{0}, split_into{-1};
  std::vector<Vertex> marked;
  std::vector<int> touched;
  for (Vertex pivot : make_vertex_set({signature_domain.begin(), signature_domain.end()})) {
    marked.clear();
    for (Vertex w : g.neighbors(pivot))
      if (cls[w] >= 0) marked.push_back(w);
    if (mode == NeighborhoodMode::closed && cls[pivot] >= 0) marked.push_back(pivot);
    touched.clear();
    for (Vertex w : marked) {
      if (marked_count[cls[w]]++ == 0) touched.push_back(cls[w]);
    }
    for (int c : touched) {
      if (marked_count[c] == class_size[c]) continue;  // whole class marked: no split
      split_into[c] = class_count++;
      class_size.push_back(0);
      marked_count.push_back(0);
      split_into.push_back(-1);
    }
    for (Vertex w : marked) {
      const int c = cls[w];
      if (split_into[c] < 0) continue;
      cls[w] = split_into[c];
      --class_size[c];
      ++class_size[split_into[c]];
    }
    for (int c : touched) {
      marked_count[c] = 0;
      split_into[c] = -1;
    }
  }

  std::vector<VertexSet> members(class_count);
  for (Vertex v : make_vertex_set({restrict_to.begin(), restrict_to.end()})) {
    members[cls[v]].push_back(v);
  }
  std::vector<VertexSet> ordered;
  for (auto& m : members)
    if (!m.empty()) ordered.push_back(std::move(m));
  std::sort(ordered.begin(), ordered.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });

  const VertexSet domain = make_vertex_set({signature_domain.begin(), signature_domain.end()});
  for (auto& m : ordered) {
    TwinClass tc;
    const Vertex rep = m.front();
    for (Vertex d : domain) {
      if (g.adjacent(rep, d) || (mode == NeighborhoodMode::closed && d == rep)) {
        tc.signature.push_back(d);
      }
    }
    if (m.size() >= 2) {
      if (is_clique(g, m))
        tc.kind = TwinKind::true_twins;
      else if (is_independent(g, m))
        tc.kind = TwinKind::false_twins;
      else
        tc.kind = TwinKind::mixed;
    }
    tc.members = std::move(m);
    result.classes.push_back(std::move(tc));
  }
  return result;
}

NeighborhoodDiversity neighborhood_diversity(const Graph& g) {
  const int n = g.vertex_count();
  // u, v share a type iff N(u) \ {v} == N(v) \ {u}; this is an equivalence
  // relation, so comparing against each class representative suffices.
  auto same_type = [&](Vertex u, Vertex v) {
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (true) {
      while (i < nu.size() && nu[i] == v) ++i;
      while (j < nv.size() && nv[j] == u) ++j;
      if (i == nu.size() || j == nv.size()) return i == nu.size() && j == nv.size();
      if (nu[i] != nv[j]) return false;
      ++i;
      ++j;
    }
  };

  std::vector<VertexSet> groups;
  for (Vertex v = 0; v < n; ++v) {
    bool placed = false;
    for (auto& grp : groups) {
      if (same_type(grp.front(), v)) {
        grp.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({v});
  }

  NeighborhoodDiversity nd;
  nd.t = static_cast<int>(groups.size());
  for (auto& grp : groups) {
    TwinClass tc;
    const Vertex rep = grp.front();
    for (Vertex w : g.neighbors(rep)) {
      if (!std::binary_search(grp.begin(), grp.end(), w)) tc.signature.push_back(w);
    }
    if (grp.size() >= 2) {
      tc.kind = g.adjacent(grp[0], grp[1]) ? TwinKind::true_twins : TwinKind::false_twins;
    }
    tc.members = std::move(grp);
    nd.classes.classes.push_back(std::move(tc));
  }
  return nd;
}

std::optional<std::array<Vertex, 3>> find_induced_p3(const Graph& g) {
  return find_p3_masked(g, std::vector<char>(g.vertex_count(), 1));
}

std::optional<VertexSet> find_cluster_deletion_set(const Graph& g, int budget) {
  if (budget < 0) return std::nullopt;
  std::vector<char> alive(g.vertex_count(), 1);
  for (int depth = 0; depth <= budget; ++depth) {
    std::vector<Vertex> chosen;
    if (cluster_branch(g, alive, depth, chosen)) return make_vertex_set(std::move(chosen));
  }
  return std::nullopt;
}

}  // namespace tfed
