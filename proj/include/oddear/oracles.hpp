#pragma once

// Brute-force reference implementations for tests. Nothing here reuses the
// traversal or parity code of the algorithms being checked.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "oddear/graph.hpp"
#include "oddear/matroid.hpp"
#include "oddear/tok4.hpp"

namespace oddear::oracle {

using EdgeSet = std::vector<EdgeId>;  // sorted

// Size of a maximum matching by exhaustive search (at most 20 vertices).
std::size_t max_matching_size(const GraphView& g);
bool has_perfect_matching(const GraphView& g);
bool is_factor_critical(const GraphView& g);

// All circuits via the GF(2) cycle space, sorted lexicographically.
std::vector<EdgeSet> enum_circuits(const Graph& g, std::size_t max_edges = 16);

struct OddPair {
  EdgeSet first;
  EdgeSet second;
};

// Per block: two odd circuits meeting in an even number of edges, if any.
// Blocks come from the common-circuit relation on the enumerated circuits.
std::optional<OddPair> brute_even_odd_pair(const Graph& g, std::size_t max_edges = 16);
inline bool brute_oddc3_free(const Graph& g, std::size_t max_edges = 16) { return !brute_even_odd_pair(g, max_edges); }

// Direct search for an odd-C3+ subgraph: an odd circuit plus an odd path
// between two of its vertices, internally disjoint from it.
bool has_oddc3_subgraph(const Graph& g, std::size_t max_edges = 16);

// Some simple graph has g as its line graph (exhaustive root search, at most 10 vertices).
bool has_line_graph_root(const Graph& g);

// Totally odd K4 subdivision by subset search: four degree-3 vertices, the rest
// of degree 2, six odd branch-to-branch paths joining distinct pairs.
std::optional<Tok4Cert> brute_tok4(const Graph& g, std::size_t max_edges = 14);

// All circuits of m (at most 64 elements, kernel dimension at most max_dim),
// smallest first. Minimality checked by single-element deletions.
std::vector<ElementSet> enum_matroid_circuits(const BinaryMatroid& m, std::size_t max_dim = 20);

}  // namespace oddear::oracle
