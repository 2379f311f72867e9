#pragma once

#include <optional>
#include <span>

#include "oddear/graph.hpp"

namespace oddear {

enum class Parity { even = 0, odd = 1 };

inline Parity parity_of(std::size_t length) { return length % 2 == 0 ? Parity::even : Parity::odd; }

// uv-path of the requested parity, or nullopt when none exists.
// Throws PreconditionError when u == v or either vertex is absent.
std::optional<Path> parity_path(const GraphView& g, VertexId u, VertexId v, Parity parity);

// Same, but g is known to be a 2-connected non-bipartite block containing
// the odd circuit `odd`. Always succeeds under that assumption.
Path parity_path_in_block(const GraphView& g, VertexId u, VertexId v, Parity parity, const Circuit& odd);

struct PathPair {
  Path first;   // starts in s_set
  Path second;  // starts in s_set
};

// Two {S,T}-paths sharing no vertex, internal vertices outside S and T.
// A singleton S (or T) may be shared as the common end of both paths.
// Paths of length 0 occur when a vertex lies in both sets.
std::optional<PathPair> two_disjoint_paths(const GraphView& g, std::span<const VertexId> s_set,
                                           std::span<const VertexId> t_set);

// Even uv-path with at least 4 edges, via an odd av-path in (G - u) - av.
std::optional<Path> even_path_ge4(const Graph& g, VertexId u, VertexId v);

// BFS path; ties broken by ascending neighbour id.
std::optional<Path> shortest_path(const GraphView& g, VertexId u, VertexId v);

// Shortest path from a vertex in `from` to a vertex in `to` whose internal
// vertices avoid both sets and `forbidden`.
std::optional<Path> connecting_path(const GraphView& g, std::span<const VertexId> from, std::span<const VertexId> to,
                                    std::span<const VertexId> forbidden = {});

}  // namespace oddear
