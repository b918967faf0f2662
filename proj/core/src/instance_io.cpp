#include "tfed/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "tfed/errors.hpp"

namespace tfed {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

long long to_integer(std::string_view token, int line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

struct Header {
  long long n = 0, m = 0, k = 0, h = 0;
  bool directed = false;
};

}  // namespace

AnyInstance parse_instance(std::string_view text) {
  std::optional<Header> header;
  std::vector<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> seen;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == 'c') continue;
    if (tokens[0] == "p") {
      if (header) throw SemanticError(line_no, "second header line");
      if (tokens.size() != 7 || tokens[1] != "tfed") {
        throw ParseError(line_no, "expected 'p tfed <n> <m> <k> <h> <undirected|directed>'");
      }
      Header hd;
      hd.n = to_integer(tokens[2], line_no);
      hd.m = to_integer(tokens[3], line_no);
      hd.k = to_integer(tokens[4], line_no);
      hd.h = to_integer(tokens[5], line_no);
      if (tokens[6] == "directed") {
        hd.directed = true;
      } else if (tokens[6] != "undirected") {
        throw ParseError(line_no, "graph kind must be 'undirected' or 'directed'");
      }
      if (hd.n < 0 || hd.n > 50'000'000) throw SemanticError(line_no, "vertex count out of range");
      if (hd.m < 0) throw SemanticError(line_no, "negative edge count");
      if (hd.k < 0) throw SemanticError(line_no, "negative budget k");
      if (hd.h < 1 || hd.h > 2'000'000'000) throw SemanticError(line_no, "h must be positive");
      header = hd;
      continue;
    }
    if (tokens[0] == "e" || tokens[0] == "a") {
      if (!header) throw ParseError(line_no, "edge line before the header");
      if (tokens.size() != 3) throw ParseError(line_no, "expected '" + std::string(tokens[0]) + " u v'");
      const bool arc = tokens[0] == "a";
      if (arc != header->directed) {
        throw SemanticError(line_no, arc ? "arc line in an undirected instance"
                                         : "edge line in a directed instance");
      }
      const long long u = to_integer(tokens[1], line_no);
      const long long v = to_integer(tokens[2], line_no);
      if (u < 0 || v < 0 || u >= header->n || v >= header->n) {
        throw SemanticError(line_no, "vertex identifier out of range");
      }
      if (u == v) throw SemanticError(line_no, "self-loop");
      std::pair<int, int> key{static_cast<int>(u), static_cast<int>(v)};
      if (!arc && key.first > key.second) std::swap(key.first, key.second);
      if (!seen.insert(key).second) throw SemanticError(line_no, "duplicate edge");
      pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
  }
  if (!header) throw ParseError(line_no, "missing header line");
  if (static_cast<long long>(pairs.size()) != header->m) {
    throw SemanticError(line_no, "header announces " + std::to_string(header->m) + " edges, found " +
                                     std::to_string(pairs.size()));
  }
  const int n = static_cast<int>(header->n);
  if (header->directed) {
    std::vector<Arc> arcs;
    for (auto [u, v] : pairs) arcs.push_back({u, v});
    return DiInstance{DiGraph(n, arcs), header->k, static_cast<int>(header->h)};
  }
  EdgeSet edges;
  for (auto [u, v] : pairs) edges.emplace_back(u, v);
  return Instance{Graph(n, edges), header->k, static_cast<int>(header->h)};
}

Instance parse_undirected_instance(std::string_view text) {
  AnyInstance any = parse_instance(text);
  if (auto* inst = std::get_if<Instance>(&any)) return std::move(*inst);
  throw SemanticError(1, "expected an undirected instance");
}

DiInstance parse_directed_instance(std::string_view text) {
  AnyInstance any = parse_instance(text);
  if (auto* inst = std::get_if<DiInstance>(&any)) return std::move(*inst);
  throw SemanticError(1, "expected a directed instance");
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  const Graph& g = instance.graph;
  out << "p tfed " << g.vertex_count() << ' ' << g.edge_count() << ' ' << instance.k << ' '
      << instance.h << " undirected\n";
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string serialize_instance(const DiInstance& instance) {
  std::ostringstream out;
  const DiGraph& d = instance.digraph;
  out << "p tfed " << d.vertex_count() << ' ' << d.arc_count() << ' ' << instance.k << ' '
      << instance.h << " directed\n";
  for (const Arc& a : d.arcs()) out << "a " << a.tail << ' ' << a.head << '\n';
  return out.str();
}

DiGraph parse_arc_list(std::string_view text) {
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  int line_no = 0;
  int n = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto tokens = split_tokens(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (tokens.empty() || tokens[0] == "c" || tokens[0].front() == '#') continue;
    if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
    const long long u = to_integer(tokens[0], line_no);
    const long long v = to_integer(tokens[1], line_no);
    if (u < 0 || v < 0 || u > 50'000'000 || v > 50'000'000) {
      throw SemanticError(line_no, "vertex identifier out of range");
    }
    if (u == v) throw SemanticError(line_no, "self-loop");
    const Arc a{static_cast<int>(u), static_cast<int>(v)};
    if (!seen.insert(a).second) throw SemanticError(line_no, "duplicate arc");
    arcs.push_back(a);
    n = std::max(n, static_cast<int>(std::max(u, v)) + 1);
  }
  return DiGraph(n, arcs);
}

}  // namespace tfed
