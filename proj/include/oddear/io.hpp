#pragma once

#include <istream>
#include <string>

#include "oddear/graph.hpp"

namespace oddear {

// "graph <name>", then "v <id>" lines, then "e <edge-id> <u> <v>" lines; '#' starts a comment.
// Throws ParseError (with the line number) on malformed input, loops or unknown vertices.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
std::string format_graph(const Graph& g);
std::string format_dot(const Graph& g);

}  // namespace oddear
