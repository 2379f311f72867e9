#pragma once

#include <array>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "oddear/ears.hpp"
#include "oddear/graph.hpp"
#include "oddear/oddc3.hpp"

namespace oddear {

// Three internally disjoint odd u-v paths, each running from u to v.
struct OddThetaCert {
  VertexId u = 0;
  VertexId v = 0;
  std::array<Path, 3> paths;
};

Validation verify_odd_theta(const Graph& g, const OddThetaCert& t);

// Totally odd K4 subdivision. paths[k] joins the branch pair kTok4Pairs[k], running from the first to the second.
inline constexpr std::array<std::pair<int, int>, 6> kTok4Pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct Tok4Cert {
  std::array<VertexId, 4> branch{};
  std::array<Path, 6> paths;
};

Validation verify_tok4(const Graph& g, const Tok4Cert& c);

// Odd theta of the bipartite 2-connected g through `target`. p is an odd ear of
// the 2-connected subgraph spanned by h_sub. Throws PreconditionError otherwise.
OddThetaCert find_odd_theta_through(const Graph& g, std::span<const EdgeId> h_sub, const Path& p, VertexId target);

using OddC3OrTok4 = std::variant<OddC3Cert, Tok4Cert>;

// c an odd circuit, v off c, paths three odd v-c paths sharing only v with
// interiors off c (ends on c may coincide).
OddC3OrTok4 oddc3_or_tok4_from_three_paths(const Graph& g, const Circuit& c, VertexId v, const std::array<Path, 3>& paths);

struct Tok4Verdict {
  enum class Kind { tok4, none, breach };
  Kind kind = Kind::none;
  std::optional<Tok4Cert> tok4;
  std::optional<OddC3Cert> breach;  // the input is not odd-C3+-free
  std::size_t phibar = 0;           // set unless kind == breach
  bool bipartite = false;
};

// Input simple and 2-connected. Throws PreconditionError otherwise, ScaleBoundExceeded past max_edges.
Tok4Verdict detect_tok4(const Graph& g, std::size_t max_edges = 13);

struct CriticalityPredicates {
  bool critical_non_bipartite = false;
  bool elementary = false;
  bool basic = false;
  bool critical_non_basic = false;
};

// Throws ScaleBoundExceeded past max_edges.
CriticalityPredicates criticality_predicates(const Graph& g, std::size_t max_edges = 16);

struct CircuitComponent {
  std::vector<EdgeId> edges;  // E(C) plus the component's edges
  bool critical_non_bipartite = false;
  bool elementary = false;
  bool ok() const { return critical_non_bipartite && elementary; }
};

struct CircuitComponentReport {
  bool holds = true;
  std::vector<CircuitComponent> components;  // components of g - E(c) with at least one edge
};

// Throws PreconditionError when g is bipartite, c is not an odd circuit, or g contains a TOK4.
CircuitComponentReport check_circuit_components(const Graph& g, const Circuit& c, std::size_t max_edges = 14);

}  // namespace oddear
