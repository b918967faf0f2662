#include "tfed/path_dp.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "tfed/errors.hpp"
#include "tfed/structure.hpp"

namespace tfed {

namespace {

struct State {
  std::vector<std::uint16_t> label;  // per bag position, restricted-growth form
  std::vector<int> size;             // per part label
  long long cost = 0;
  int parent = -1;
};

struct Policy {
  int h = 1;
  std::optional<long long> cap;
  bool single_join = false;
  bool interval_prune = false;
  long long k = 0;
};

std::string key_of(const State& s) {
  std::string key;
  key.reserve(2 * s.label.size() + 4 * s.size.size() + 1);
  for (auto l : s.label) {
    key.push_back(static_cast<char>(l & 0xff));
    key.push_back(static_cast<char>(l >> 8));
  }
  key.push_back('|');
  for (int v : s.size) {
    for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  }
  return key;
}

/// Relabels parts by first appearance in bag order (smallest identifier first).
void canonicalize(std::vector<int>& raw_label, const std::vector<int>& raw_size, State& out) {
  std::vector<int> remap(raw_size.size(), -1);
  int next = 0;
  out.label.resize(raw_label.size());
  out.size.clear();
  for (std::size_t j = 0; j < raw_label.size(); ++j) {
    int& m = remap[raw_label[j]];
    if (m < 0) {
      m = next++;
      out.size.push_back(raw_size[raw_label[j]]);
    }
    out.label[j] = static_cast<std::uint16_t>(m);
  }
}

class PathDp {
 public:
  PathDp(const Graph& g, const PathDecomposition& nice, Policy policy)
      : g_(g), nice_(nice), policy_(policy) {}

  std::optional<PartitionSolution> run(DpStats* stats) {
    layers_.clear();
    layers_.push_back({State{}});
    for (std::size_t i = 0; i < nice_.events.size(); ++i) {
      const NiceEvent& ev = nice_.events[i];
      const VertexSet& before = nice_.bags[i];
      const VertexSet& after = nice_.bags[i + 1];
      if (after.size() > 0xfffe) throw CapExceeded("bag too large for the DP");
      next_.clear();
      index_.clear();
      if (ev.kind == EventKind::introduce) {
        introduce(ev.vertex, before, after);
      } else {
        forget(ev.vertex, before);
      }
      stats_.widest_layer = std::max<long long>(stats_.widest_layer, next_.size());
      layers_.push_back(std::move(next_));
      if (layers_.back().empty()) break;
    }
    if (stats) *stats = stats_;
    if (layers_.size() != nice_.events.size() + 1 || layers_.back().empty()) return std::nullopt;
    return reconstruct();
  }

 private:
  void offer(State&& s) {
    if (policy_.cap && s.cost > *policy_.cap) {
      ++stats_.states_pruned;
      return;
    }
    if (policy_.interval_prune && violates_interval_rules(s)) {
      ++stats_.states_pruned;
      return;
    }
    auto [it, inserted] = index_.try_emplace(key_of(s), static_cast<int>(next_.size()));
    if (inserted) {
      ++stats_.states_created;
      next_.push_back(std::move(s));
      return;
    }
    ++stats_.states_merged;
    State& existing = next_[it->second];
    if (s.cost < existing.cost) {
      existing.cost = s.cost;
      existing.parent = s.parent;
    }
  }

  // A bag larger than k+1 stays whole; at most one part exceeds k+1.
  bool violates_interval_rules(const State& s) const {
    const long long big = policy_.k + 1;
    if (static_cast<long long>(s.label.size()) > big && s.size.size() > 1) return true;
    int large = 0;
    for (int sz : s.size)
      if (sz > big) ++large;
    return large > 1;
  }

  void introduce(Vertex v, const VertexSet& before, const VertexSet& after) {
    const std::size_t pos =
        static_cast<std::size_t>(std::lower_bound(after.begin(), after.end(), v) - after.begin());
    std::vector<char> nb(before.size(), 0);
    int total_nb = 0;
    for (std::size_t j = 0; j < before.size(); ++j) {
      if (g_.adjacent(v, before[j])) {
        nb[j] = 1;
        ++total_nb;
      }
    }
    const auto& prev = layers_.back();
    std::vector<int> nb_count, adjacent_parts, raw_label(after.size()), raw_size;
    for (int si = 0; si < static_cast<int>(prev.size()); ++si) {
      const State& s = prev[si];
      const int parts = static_cast<int>(s.size.size());
      nb_count.assign(parts, 0);
      for (std::size_t j = 0; j < before.size(); ++j)
        if (nb[j]) ++nb_count[s.label[j]];
      adjacent_parts.clear();
      for (int q = 0; q < parts; ++q)
        if (nb_count[q] > 0) adjacent_parts.push_back(q);

      auto emit = [&](unsigned long long mask) {
        long long new_size = 1;
        int kept = 0;
        std::vector<char> merged(parts, 0);
        for (std::size_t b = 0; b < adjacent_parts.size(); ++b) {
          if (mask >> b & 1ULL) {
            const int q = adjacent_parts[b];
            merged[q] = 1;
            new_size += s.size[q];
            kept += nb_count[q];
          }
        }
        if (new_size > policy_.h) return;
        raw_size.assign(s.size.begin(), s.size.end());
        raw_size.push_back(static_cast<int>(new_size));
        for (std::size_t j = 0, old = 0; j < after.size(); ++j) {
          if (j == pos) {
            raw_label[j] = parts;
            continue;
          }
          const int l = s.label[old++];
          raw_label[j] = merged[l] ? parts : l;
        }
        State out;
        canonicalize(raw_label, raw_size, out);
        out.cost = s.cost + (total_nb - kept);
        out.parent = si;
        offer(std::move(out));
      };

      if (policy_.single_join) {
        emit(0);
        for (std::size_t b = 0; b < adjacent_parts.size(); ++b) emit(1ULL << b);
      } else {
        if (adjacent_parts.size() > 24) throw CapExceeded("too many parts adjacent to one vertex");
        const unsigned long long limit = 1ULL << adjacent_parts.size();
        for (unsigned long long mask = 0; mask < limit; ++mask) emit(mask);
      }
    }
  }

  void forget(Vertex v, const VertexSet& before) {
    const std::size_t pos =
        static_cast<std::size_t>(std::lower_bound(before.begin(), before.end(), v) - before.begin());
    const auto& prev = layers_.back();
    std::vector<int> raw_label(before.size() - 1), raw_size;
    for (int si = 0; si < static_cast<int>(prev.size()); ++si) {
      const State& s = prev[si];
      for (std::size_t j = 0, out_j = 0; j < before.size(); ++j) {
        if (j != pos) raw_label[out_j++] = s.label[j];
      }
      raw_size.assign(s.size.begin(), s.size.end());
      State out;
      canonicalize(raw_label, raw_size, out);  // a part with no bag vertex left is dropped
      out.cost = s.cost;
      out.parent = si;
      offer(std::move(out));
    }
  }

  PartitionSolution reconstruct() const {
    // Walk parents back from the single empty-bag state.
    std::vector<int> chain(layers_.size());
    int idx = 0;
    for (std::size_t li = layers_.size(); li-- > 0;) {
      chain[li] = idx;
      idx = layers_[li][idx].parent;
    }
    std::vector<int> parent(g_.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < nice_.events.size(); ++i) {
      const NiceEvent& ev = nice_.events[i];
      if (ev.kind != EventKind::introduce) continue;
      const VertexSet& bag = nice_.bags[i + 1];
      const State& s = layers_[i + 1][chain[i + 1]];
      const auto pos = std::lower_bound(bag.begin(), bag.end(), ev.vertex) - bag.begin();
      for (std::size_t j = 0; j < bag.size(); ++j) {
        if (s.label[j] == s.label[pos]) parent[find(bag[j])] = find(ev.vertex);
      }
    }
    VertexPartition partition;
    std::vector<int> slot(g_.vertex_count(), -1);
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      const int r = find(v);
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(partition.parts.size());
        partition.parts.emplace_back();
      }
      partition.parts[slot[r]].push_back(v);
    }
    PartitionSolution solution = solution_from_partition(g_, std::move(partition));
    const long long dp_cost = layers_.back()[chain.back()].cost;
    if (solution.cost > dp_cost) {
      throw std::logic_error("DP certificate costs more than the DP value");
    }
    return solution;
  }

  const Graph& g_;
  const PathDecomposition& nice_;
  Policy policy_;
  std::vector<std::vector<State>> layers_;
  std::vector<State> next_;
  std::unordered_map<std::string, int> index_;
  DpStats stats_;
};

PathDecomposition checked_nice(const Graph& g, const PathDecomposition& pd) {
  if (const std::string problem = validate(g, pd); !problem.empty()) {
    throw InvalidDecomposition(problem);
  }
  return make_nice(pd);
}

}  // namespace

std::optional<PartitionSolution> dp_solve(const Graph& g, const PathDecomposition& pd, int h,
                                          std::optional<long long> k_cap, DpStats* stats) {
  if (h < 1) throw MalformedInput("h must be positive");
  const PathDecomposition nice = checked_nice(g, pd);
  Policy policy;
  policy.h = h;
  policy.cap = k_cap;
  return PathDp(g, nice, policy).run(stats);
}

std::optional<PartitionSolution> dp_solve_interval(const Graph& g, const PathDecomposition& pd,
                                                   long long k, int h, DpStats* stats) {
  if (h < 1) throw MalformedInput("h must be positive");
  if (k < 0) return std::nullopt;
  for (const auto& bag : pd.bags) {
    if (!is_clique(g, bag)) throw NotCliqueBags("decomposition bag is not a clique");
  }
  const PathDecomposition nice = checked_nice(g, pd);
  Policy policy;
  policy.h = h;
  policy.cap = k;
  policy.single_join = true;
  policy.interval_prune = true;
  policy.k = k;
  return PathDp(g, nice, policy).run(stats);
}

}  // namespace tfed
