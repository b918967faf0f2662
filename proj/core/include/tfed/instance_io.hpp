#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "tfed/graph.hpp"

namespace tfed {

/// Text format:
///
///   c any comment
///   p tfed <n> <m> <k> <h> <undirected|directed>
///   e <u> <v>        (m lines, undirected)
///   a <tail> <head>  (m lines, directed)
///
/// Malformed lines raise ParseError; well-formed lines that break an
/// invariant (range, duplicates, loops, wrong edge kind, count mismatch)
/// raise SemanticError. Both carry the 1-based line number.
using AnyInstance = std::variant<Instance, DiInstance>;

AnyInstance parse_instance(std::string_view text);

/// parse_instance that insists on an undirected (or directed) header.
Instance parse_undirected_instance(std::string_view text);
DiInstance parse_directed_instance(std::string_view text);

std::string serialize_instance(const Instance& instance);
std::string serialize_instance(const DiInstance& instance);

/// One arc per line "u v"; '#' or 'c' lines are comments. The vertex count
/// is one more than the largest identifier.
DiGraph parse_arc_list(std::string_view text);

}  // namespace tfed
