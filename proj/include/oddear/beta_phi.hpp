#pragma once

#include <optional>
#include <vector>

#include "oddear/ears.hpp"
#include "oddear/graph.hpp"
#include "oddear/oddc3.hpp"

namespace oddear {

// Decompositions returned here have host == &g and cover the stated edges;
// check partial ones with validate_partial.

struct BetaResult {
  std::size_t value = 0;
  std::vector<EdgeId> subgraph;             // edges of a maximizing factor-critical block
  std::optional<EarDecomposition> witness;  // all ears odd, value ears; absent when value = 0
};

// Exhaustive over edge subsets. Throws ScaleBoundExceeded past max_edges.
BetaResult beta_brute(const Graph& g, std::size_t max_edges = 16);

struct BetaLeOne {
  bool holds = true;
  OddC3Decision decision;
};

BetaLeOne beta_le_1(const Graph& g);

struct OddEarResult {
  std::size_t value = 0;
  EarDecomposition witness;
};

// Exact largest number of odd ears. Throws PreconditionError unless g is
// 2-connected, ScaleBoundExceeded past max_edges.
OddEarResult max_odd_ears(const Graph& g, std::size_t max_edges = 13);
std::size_t phi(const Graph& g, std::size_t max_edges = 13);

// Optimal decomposition whose first ear contains e.
EarDecomposition optimal_through_edge(const Graph& g, EdgeId e, std::size_t max_edges = 13);

// Optimal decomposition whose first ear is an odd circuit, built from the
// optimal decomposition d. Throws PreconditionError on bipartite g or when d is not optimal.
EarDecomposition optimal_first_ear_odd(const Graph& g, const EarDecomposition& d, std::size_t max_edges = 13);

// Decomposition of hk == gen_hk(k) with k + 1 odd ears among 2k. Throws PreconditionError for k < 2.
EarDecomposition hk_witness(const Graph& hk, int k);

}  // namespace oddear
