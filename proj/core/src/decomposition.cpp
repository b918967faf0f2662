#include "tfed/decomposition.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "tfed/errors.hpp"
#include "tfed/structure.hpp"

namespace tfed {

int PathDecomposition::width() const {
  std::size_t widest = 0;
  for (const auto& bag : bags) widest = std::max(widest, bag.size());
  return static_cast<int>(widest) - 1;
}

std::string validate(const Graph& g, const PathDecomposition& pd) {
  const int n = g.vertex_count();
  std::vector<int> first(n, -1), last(n, -1), occurrences(n, 0);
  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    const auto& bag = pd.bags[i];
    for (std::size_t j = 0; j < bag.size(); ++j) {
      const Vertex v = bag[j];
      if (v < 0 || v >= n) return "bag " + std::to_string(i) + " has vertex out of range";
      if (j > 0 && bag[j - 1] >= v) return "bag " + std::to_string(i) + " is not a sorted set";
      if (first[v] < 0) first[v] = static_cast<int>(i);
      last[v] = static_cast<int>(i);
      ++occurrences[v];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (first[v] < 0) return "vertex " + std::to_string(v) + " is in no bag";
    if (occurrences[v] != last[v] - first[v] + 1) {
      return "bags containing vertex " + std::to_string(v) + " are not contiguous";
    }
  }
  for (const Edge& e : g.edges()) {
    // Contiguity makes the intervals [first, last] sufficient.
    if (std::max(first[e.u], first[e.v]) > std::min(last[e.u], last[e.v])) {
      return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is in no bag";
    }
  }
  return {};
}

PathDecomposition build_cvd_path_decomposition(const Graph& g, std::span<const Vertex> X) {
  const VertexSet x_set = make_vertex_set({X.begin(), X.end()});
  const VertexSet rest = complement(g.vertex_count(), x_set);
  PathDecomposition pd;
  for (const auto& component : connected_components(g, rest).parts) {
    VertexSet bag = x_set;
    bag.insert(bag.end(), component.begin(), component.end());
    pd.bags.push_back(make_vertex_set(std::move(bag)));
  }
  if (pd.bags.empty() && !x_set.empty()) pd.bags.push_back(x_set);
  return pd;
}

PathDecomposition make_nice(const PathDecomposition& pd) {
  PathDecomposition nice;
  VertexSet current;
  nice.bags.push_back(current);
  auto step = [&](EventKind kind, Vertex v) {
    nice.events.push_back({kind, v});
    if (kind == EventKind::introduce) {
      current.insert(std::lower_bound(current.begin(), current.end(), v), v);
    } else {
      current.erase(std::lower_bound(current.begin(), current.end(), v));
    }
    nice.bags.push_back(current);
  };
  for (const auto& raw : pd.bags) {
    const VertexSet bag = make_vertex_set(raw);
    VertexSet gone, fresh;
    std::set_difference(current.begin(), current.end(), bag.begin(), bag.end(),
                        std::back_inserter(gone));
    std::set_difference(bag.begin(), bag.end(), current.begin(), current.end(),
                        std::back_inserter(fresh));
    for (Vertex v : gone) step(EventKind::forget, v);
    for (Vertex v : fresh) step(EventKind::introduce, v);
  }
  const VertexSet remaining = current;
  for (Vertex v : remaining) step(EventKind::forget, v);
  return nice;
}

IntervalModel interval_clique_path(std::span<const Interval> intervals) {
  const int n = static_cast<int>(intervals.size());
  for (const auto& iv : intervals) {
    if (iv.high < iv.low) throw MalformedInput("interval with low > high");
  }
  EdgeSet edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Rational lo = std::max(intervals[u].low, intervals[v].low);
      const Rational hi = std::min(intervals[u].high, intervals[v].high);
      if (!(hi < lo)) edges.emplace_back(u, v);
    }
  }

  // Closed intervals: at equal coordinates starts are processed before ends.
  std::vector<std::tuple<Rational, int, int>> sweep;
  for (int v = 0; v < n; ++v) {
    sweep.emplace_back(intervals[v].low, 0, v);
    sweep.emplace_back(intervals[v].high, 1, v);
  }
  std::sort(sweep.begin(), sweep.end());

  IntervalModel model;
  model.graph = Graph(n, edges);
  std::set<Vertex> active;
  bool grew = false;
  for (const auto& [coord, kind, v] : sweep) {
    if (kind == 0) {
      active.insert(v);
      grew = true;
    } else {
      if (grew) model.decomposition.bags.emplace_back(active.begin(), active.end());
      grew = false;
      active.erase(v);
    }
  }
  return model;
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational { throw MalformedInput("not a rational number: '" + text + "'"); };
  if (text.empty()) return fail();
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      std::size_t used = 0;
      const long long num = std::stoll(text.substr(0, slash), &used);
      if (used != slash) return fail();
      const std::string den_text = text.substr(slash + 1);
      const long long den = std::stoll(den_text, &used);
      if (used != den_text.size() || den == 0) return fail();
      return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
      std::size_t used = 0;
      const long long value = std::stoll(text, &used);
      if (used != text.size()) return fail();
      return Rational(value);
    }
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15 ||
        !std::all_of(frac.begin(), frac.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return fail();
    }
    const bool negative = !whole.empty() && whole[0] == '-';
    long long w = 0;
    if (!whole.empty() && whole != "-" && whole != "+") {
      std::size_t used = 0;
      w = std::stoll(whole, &used);
      if (used != whole.size()) return fail();
    }
    long long scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const long long f = std::stoll(frac);
    const long long magnitude = (w < 0 ? -w : w) * scale + f;
    return Rational(negative ? -magnitude : magnitude, scale);
  } catch (const std::logic_error&) {
    return fail();
  }
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void write_decomposition(std::ostream& out, const PathDecomposition& pd) {
  for (const auto& bag : pd.bags) {
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (i) out << ' ';
      out << bag[i];
    }
    out << '\n';
  }
}

PathDecomposition read_decomposition(std::istream& in) {
  PathDecomposition pd;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    VertexSet bag;
    std::string token;
    while (ls >> token) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size()) throw ParseError(line_no, "bad vertex '" + token + "'");
        bag.push_back(v);
      } catch (const std::logic_error&) {
        throw ParseError(line_no, "bad vertex '" + token + "'");
      }
    }
    if (!bag.empty()) pd.bags.push_back(make_vertex_set(std::move(bag)));
  }
  return pd;
}

std::vector<Interval> read_intervals(std::istream& in) {
  std::vector<Interval> result;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string lo, hi, extra;
    if (!(ls >> lo)) continue;
    if (lo[0] == '#' || lo == "c") continue;
    if (!(ls >> hi) || (ls >> extra)) throw ParseError(line_no, "expected 'low high'");
    try {
      result.push_back({parse_rational(lo), parse_rational(hi)});
    } catch (const MalformedInput& e) {
      throw ParseError(line_no, e.what());
    }
    if (result.back().high < result.back().low) throw SemanticError(line_no, "low > high");
  }
  return result;
}

}  // namespace tfed
