#include "tfed/approx.hpp"

#include <algorithm>

#include "tfed/errors.hpp"
#include "tfed/preprocess.hpp"
#include "tfed/structure.hpp"

namespace tfed {

std::string to_string(ApproxOutcome o) {
  return o == ApproxOutcome::solution ? "solution" : "no-instance";
}

namespace {

struct Piece {
  VertexSet vertices;
  long long cut = 0;
};

/// Every connected vertex set of size <= h, each exactly once (extension by
/// exclusive neighbours, rooted at the smallest member).
class ConnectedSets {
 public:
  ConnectedSets(const Graph& g, int h, long long k, long long cap)
      : g_(g), h_(h), k_(k), cap_(cap), covered_(g.vertex_count(), 0) {}

  std::vector<Piece> run() {
    for (Vertex root = 0; root < g_.vertex_count(); ++root) {
      root_ = root;
      std::vector<Vertex> ext;
      for (Vertex u : g_.neighbors(root)) {
        if (u > root) ext.push_back(u);
      }
      add(root);
      extend(ext);
      remove(root);
    }
    return std::move(pieces_);
  }

 private:
  void add(Vertex w) {
    for (Vertex u : g_.neighbors(w)) {
      if (in_set(u)) ++internal_;
      ++covered_[u];
    }
    ++covered_[w];
    degree_sum_ += g_.degree(w);
    sub_.push_back(w);
  }

  void remove(Vertex w) {
    sub_.pop_back();
    degree_sum_ -= g_.degree(w);
    --covered_[w];
    for (Vertex u : g_.neighbors(w)) {
      --covered_[u];
      if (in_set(u)) --internal_;
    }
  }

  bool in_set(Vertex u) const { return std::find(sub_.begin(), sub_.end(), u) != sub_.end(); }

  void extend(std::vector<Vertex> ext) {
    if (++visited_ > cap_) throw CapExceeded("too many connected sets for the extract search");
    const long long cut = degree_sum_ - 2 * internal_;
    if (cut <= k_) pieces_.push_back({make_vertex_set(sub_), cut});
    if (static_cast<int>(sub_.size()) == h_) return;
    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      for (Vertex u : g_.neighbors(w)) {
        if (u > root_ && covered_[u] == 0) next.push_back(u);
      }
      add(w);
      extend(std::move(next));
      remove(w);
    }
  }

  const Graph& g_;
  int h_;
  long long k_;
  long long cap_;
  Vertex root_ = 0;
  std::vector<int> covered_;  // members of sub_ equal or adjacent to the vertex
  std::vector<Vertex> sub_;
  long long degree_sum_ = 0;
  long long internal_ = 0;
  long long visited_ = 0;
  std::vector<Piece> pieces_;
};

class Combiner {
 public:
  Combiner(const Graph& g, std::vector<Piece> pieces, long long k, int h)
      : g_(g), pieces_(std::move(pieces)), k_(k), h_(h), blocked_(g.vertex_count(), 0) {}

  std::optional<Extract> run() {
    const int lower = (h_ + 1) / 2;
    for (const Piece& p : pieces_) {
      const int size = static_cast<int>(p.vertices.size());
      if (size >= lower && size <= h_) consider(p.vertices, p.cut);
    }
    // A union containing a piece that is already large enough cuts more than
    // that piece alone, so only small pieces are combined.
    std::vector<Piece> small;
    for (Piece& p : pieces_) {
      if (static_cast<int>(p.vertices.size()) < lower) small.push_back(std::move(p));
    }
    pieces_ = std::move(small);
    combine(0, 0, 0, 0);
    return best_;
  }

 private:
  void consider(const VertexSet& vertices, long long cut) {
    if (!best_ || cut < best_->cut || (cut == best_->cut && vertices < best_->vertices)) {
      best_ = Extract{vertices, cut};
    }
  }

  void combine(std::size_t from, int size, long long cut, int count) {
    const int lower = (h_ + 1) / 2;
    if (count >= 2 && size >= lower) {
      VertexSet all;
      for (const Piece* p : chosen_) all.insert(all.end(), p->vertices.begin(), p->vertices.end());
      consider(make_vertex_set(std::move(all)), cut);
      return;  // adding more pieces only raises the cut
    }
    for (std::size_t i = from; i < pieces_.size(); ++i) {
      const Piece& p = pieces_[i];
      const long long new_cut = cut + p.cut;
      if (new_cut > k_ || (best_ && new_cut > best_->cut)) continue;
      if (size + static_cast<int>(p.vertices.size()) > h_) continue;
      if (std::any_of(p.vertices.begin(), p.vertices.end(), [&](Vertex v) { return blocked_[v]; })) {
        continue;
      }
      mark(p, +1);
      chosen_.push_back(&p);
      combine(i + 1, size + static_cast<int>(p.vertices.size()), new_cut, count + 1);
      chosen_.pop_back();
      mark(p, -1);
    }
  }

  /// Blocks the piece and its neighbourhood so later pieces stay disjoint and non-adjacent.
  void mark(const Piece& p, int delta) {
    for (Vertex v : p.vertices) {
      blocked_[v] += delta;
      for (Vertex u : g_.neighbors(v)) blocked_[u] += delta;
    }
  }

  const Graph& g_;
  std::vector<Piece> pieces_;
  long long k_;
  int h_;
  std::vector<int> blocked_;
  std::vector<const Piece*> chosen_;
  std::optional<Extract> best_;
};

}  // namespace

std::optional<Extract> find_bounded_extract(const Graph& g, long long k, int h,
                                            const ExtractOptions& options) {
  if (h < 1) throw MalformedInput("h must be positive");
  if (k < 0) return std::nullopt;
  std::vector<Piece> pieces = ConnectedSets(g, h, k, options.max_connected_sets).run();
  return Combiner(g, std::move(pieces), k, h).run();
}

ApproxReport approx_solve(const Graph& g, long long k, int h, const ExtractOptions& options) {
  if (h < 1) throw MalformedInput("h must be positive");
  ApproxReport report;
  if (yes_instance_vertex_bound(drop_small_components(g, h), k, h) == Answer::no) {
    report.outcome = ApproxOutcome::no_instance;
    return report;
  }
  EdgeSet deleted;
  while (true) {
    const Graph current = g.without_edges(deleted);
    VertexSet component;
    for (auto& part : connected_components(current).parts) {
      if (static_cast<int>(part.size()) > h) {
        component = std::move(part);
        break;
      }
    }
    if (component.empty()) break;
    const Graph local = current.induced(component);
    const auto extract = find_bounded_extract(local, k, h, options);
    if (!extract) {
      report.outcome = ApproxOutcome::no_instance;
      report.deleted_edges.clear();
      return report;
    }
    ApproxRecord record;
    record.component = component;
    for (Vertex v : extract->vertices) record.extracted.push_back(component[v]);
    record.cut = extract->cut;
    std::vector<char> inside(g.vertex_count(), 0);
    for (Vertex v : record.extracted) inside[v] = 1;
    for (Vertex v : record.extracted) {
      for (Vertex u : current.neighbors(v)) {
        if (!inside[u]) deleted.emplace_back(v, u);
      }
    }
    std::sort(deleted.begin(), deleted.end());
    report.records.push_back(std::move(record));
    ++report.iterations;
  }
  report.outcome = ApproxOutcome::solution;
  report.deleted_edges = std::move(deleted);
  return report;
}

}  // namespace tfed
