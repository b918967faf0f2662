#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "tfed/graph.hpp"

namespace tfed {

enum class EventKind { introduce, forget };

struct NiceEvent {
  EventKind kind = EventKind::introduce;
  Vertex vertex = 0;

  friend bool operator==(const NiceEvent&, const NiceEvent&) = default;
};

/// Ordered bag sequence. After make_nice, `events` holds the introduce/forget
/// chain and `bags[i]` is the bag after event i-1 (bags.front() and
/// bags.back() are empty).
struct PathDecomposition {
  std::vector<VertexSet> bags;
  std::vector<NiceEvent> events;

  int width() const;
  bool is_nice() const { return !events.empty() || bags.empty(); }
};

/// Checks vertex coverage, edge coverage and the interpolation property.
/// Returns an empty string when valid, otherwise the first violation.
std::string validate(const Graph& g, const PathDecomposition& pd);

/// One bag X ∪ C per component C of g - X, components ordered by smallest vertex.
PathDecomposition build_cvd_path_decomposition(const Graph& g, std::span<const Vertex> X);

/// Bags between consecutive input bags are subdivided so that each step
/// forgets (first) or introduces one vertex, lowest identifier first.
/// Idempotent.
PathDecomposition make_nice(const PathDecomposition& pd);

using Rational = boost::rational<long long>;

struct Interval {
  Rational low;
  Rational high;
};

struct IntervalModel {
  Graph graph;
  /// Maximal cliques in left-endpoint sweep order.
  PathDecomposition decomposition;
};

/// Intersection graph of closed intervals with its clique path.
IntervalModel interval_clique_path(std::span<const Interval> intervals);

/// Parses "p/q", integers and finite decimals ("2.5").
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// One bag per line, space-separated identifiers; '#'-comments and blank
/// lines are skipped on read.
void write_decomposition(std::ostream& out, const PathDecomposition& pd);
PathDecomposition read_decomposition(std::istream& in);

/// One interval per line: "low high".
std::vector<Interval> read_intervals(std::istream& in);

}  // namespace tfed
