#include "tfed/preprocess.hpp"

#include <algorithm>
#include <numeric>

#include "tfed/errors.hpp"
#include "tfed/oracle.hpp"
#include "tfed/structure.hpp"

namespace tfed {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::no:
      return "no";
    case Answer::yes:
      return "yes";
    case Answer::unknown:
      return "unknown";
  }
  return "unknown";
}

long long ReducedInstance::total_delta() const {
  long long sum = 0;
  for (const auto& r : trace) sum += r.budget_delta;
  return sum;
}

Graph drop_small_components(const Graph& g, int h, std::vector<Vertex>& kept) {
  kept.clear();
  for (const auto& part : connected_components(g).parts) {
    if (static_cast<int>(part.size()) > h) kept.insert(kept.end(), part.begin(), part.end());
  }
  std::sort(kept.begin(), kept.end());
  return g.induced(kept);
}

Graph drop_small_components(const Graph& g, int h) {
  std::vector<Vertex> kept;
  return drop_small_components(g, h, kept);
}

Answer trivial_answer(const Graph& g, long long k, int h, const TrivialOptions& options) {
  if (h == 1) return k >= g.edge_count() ? Answer::yes : Answer::no;
  if (h >= max_component_size(g)) return Answer::yes;
  if (h == 2 && g.vertex_count() <= options.matching_cap) {
    return k >= opt_h2(g, {options.matching_cap}) ? Answer::yes : Answer::no;
  }
  return Answer::unknown;
}

std::optional<ReducedInstance> rule1_apply(const Graph& g, std::span<const Vertex> X,
                                           long long k, int h) {
  if (h < 1) throw MalformedInput("h must be positive");
  const VertexSet x_set = make_vertex_set({X.begin(), X.end()});
  for (Vertex x : x_set) {
    if (x < 0 || x >= g.vertex_count()) throw MalformedInput("deletion set vertex out of range");
  }
  {
    const VertexSet rest = complement(g.vertex_count(), x_set);
    if (!is_cluster_graph(g.induced(rest))) {
      throw MalformedInput("graph minus the deletion set is not a cluster graph");
    }
  }

  ReducedInstance out;
  out.graph = g;
  out.k = k;
  out.h = h;
  out.X = x_set;
  out.original_id.resize(g.vertex_count());
  std::iota(out.original_id.begin(), out.original_id.end(), 0);
  if (k < 0) return std::nullopt;

  const long long ell = static_cast<long long>(x_set.size());
  const long long threshold = ell * (h - 1) + h;

  while (true) {
    const Graph& cur = out.graph;
    const VertexSet rest = complement(cur.vertex_count(), out.X);
    bool applied = false;
    for (const auto& component : connected_components(cur, rest).parts) {
      const auto classes = twin_classes(cur, component, out.X, NeighborhoodMode::open);
      for (const auto& cls : classes.classes) {
        if (static_cast<long long>(cls.members.size()) < threshold) continue;
        const long long delta =
            static_cast<long long>(h) *
            (static_cast<long long>(component.size()) - h + static_cast<long long>(cls.signature.size()));
        RuleRecord record;
        record.rule = "twin-class-removal";
        record.budget_delta = delta;
        const VertexSet removed(cls.members.begin(), cls.members.begin() + h);
        for (Vertex v : removed) record.removed.push_back(out.original_id[v]);
        out.k -= delta;
        out.trace.push_back(std::move(record));
        if (out.k < 0) return std::nullopt;

        const VertexSet keep = complement(cur.vertex_count(), removed);
        std::vector<int> new_index(cur.vertex_count(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) new_index[keep[i]] = static_cast<int>(i);
        std::vector<Vertex> ids;
        ids.reserve(keep.size());
        for (Vertex v : keep) ids.push_back(out.original_id[v]);
        VertexSet new_x;
        for (Vertex x : out.X) new_x.push_back(new_index[x]);
        out.graph = cur.induced(keep);
        out.original_id = std::move(ids);
        out.X = std::move(new_x);
        applied = true;
        break;
      }
      if (applied) break;
    }
    if (!applied) break;
  }
  return out;
}

Answer yes_instance_vertex_bound(const Graph& g, long long k, int h) {
  if (k < 0) return Answer::no;
  const long long limit = 2 * k * static_cast<long long>(h);
  return g.vertex_count() > limit ? Answer::no : Answer::unknown;
}

}  // namespace tfed
