#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddear/graph.hpp"

namespace oddear {

// Ear 0 is `circuit`; ears 1.. are `paths`.
struct EarDecomposition {
  const Graph* host = nullptr;
  Circuit circuit;
  std::vector<Path> paths;

  std::size_t size() const { return 1 + paths.size(); }
  std::size_t ear_length(std::size_t i) const { return i == 0 ? circuit.length() : paths[i - 1].length(); }
  bool ear_odd(std::size_t i) const { return ear_length(i) % 2 == 1; }
  const std::vector<EdgeId>& ear_edges(std::size_t i) const { return i == 0 ? circuit.edges : paths[i - 1].edges; }
  std::vector<EdgeId> covered_edges() const;
  // Prefix of the first `count` ears.
  EarDecomposition prefix(std::size_t count) const;
};

struct Validation {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Every invariant, including full coverage of the host.
Validation validate(const EarDecomposition& d);
// Same without the coverage and count checks.
Validation validate_partial(const EarDecomposition& d);

std::size_t odd_ear_count(const EarDecomposition& d);

// Chain decomposition. Throws PreconditionError unless g is 2-connected.
EarDecomposition ear_decomposition(const Graph& g);

// Extends `partial` (a valid decomposition of a 2-connected subgraph) to all of g.
EarDecomposition complete_from(const Graph& g, const EarDecomposition& partial);

// Start a partial decomposition from a single circuit.
EarDecomposition from_circuit(const Graph& g, Circuit c);

struct MatchingResult {
  bool perfect = false;
  std::vector<EdgeId> matching;  // a maximum matching
};

MatchingResult maximum_matching(const GraphView& g);
MatchingResult has_perfect_matching(const GraphView& g);
bool is_factor_critical(const GraphView& g);

}  // namespace oddear
