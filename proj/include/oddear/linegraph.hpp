#pragma once

#include <optional>

#include "oddear/graph.hpp"
#include "oddear/oddc3.hpp"

namespace oddear {

// Vertices are named after h's edges; edges are named "a~b" with a before b.
Graph line_graph(const Graph& h);

// Root graph r with line_graph(r) equal to g under the naming above: r's edge
// ids are g's vertex ids and its vertices are r0, r1, ... Absent when g is not
// a line graph. Throws PreconditionError on non-simple input.
std::optional<Graph> recognize_line_graph(const Graph& g);

struct LinePipelineVerdict {
  enum class Kind { h_perfect, not_h_perfect, not_line_graph };
  Kind kind = Kind::not_line_graph;
  std::optional<Graph> root;
  std::optional<OddC3Cert> obstruction;  // against *root
};

LinePipelineVerdict h_perfect_line_pipeline(const Graph& g);

}  // namespace oddear
