#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "oddear/cycle_space.hpp"
#include "oddear/ears.hpp"
#include "oddear/graph.hpp"

namespace oddear {

// Three internally disjoint u-v paths: paths[0] and paths[1] odd, paths[2] even (>= 2).
struct OddC3Cert {
  VertexId u = 0;
  VertexId v = 0;
  std::array<Path, 3> paths;
  bool strict = false;
};

// strict is false exactly for C3+ itself.
bool is_strict_shape(const OddC3Cert& c);

// Checks every invariant, including the strict flag.
Validation verify_oddc3(const Graph& g, const OddC3Cert& cert);

// Three internally disjoint u-v paths with parities {odd, odd, even} in any order.
OddC3Cert cert_from_paths(VertexId u, VertexId v, Path a, Path b, Path c);

// c1, c2 odd circuits of the 2-connected g meeting in an even number of edges.
OddC3Cert extract_from_even_pair(const Graph& g, const Circuit& c1, const Circuit& c2);

struct BlockCert {
  enum class Kind { bridge, bipartite, basis };
  Kind kind = Kind::bridge;
  std::vector<EdgeId> edges;
  std::vector<Circuit> circuits;  // totally odd basis when kind == basis
};

struct FreeCert {
  std::vector<BlockCert> blocks;
};

struct OddC3Decision {
  std::optional<OddC3Cert> obstruction;
  FreeCert free;
  bool is_free() const { return !obstruction.has_value(); }
};

OddC3Decision decide_oddc3_free(const Graph& g);

// Rechecks a freeness certificate: blocks partition E and match the graph's blocks,
// bridge/bipartite labels hold, and basis blocks carry a totally odd circuit basis.
Validation verify_free(const Graph& g, const FreeCert& cert);

std::optional<OddC3Cert> find_strict_oddc3(const Graph& h);

struct HPerfectVerdict {
  bool h_perfect = true;
  std::optional<OddC3Cert> obstruction;
};

HPerfectVerdict line_graph_h_perfect(const Graph& h);

}  // namespace oddear
