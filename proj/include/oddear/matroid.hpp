#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "oddear/cycle_space.hpp"
#include "oddear/ears.hpp"
#include "oddear/graph.hpp"

namespace oddear {

using ElementSet = std::vector<std::uint32_t>;  // sorted element indices

class BinaryMatroid {
 public:
  // rows[i] has dimension elements.size(). Throws PreconditionError on loops,
  // duplicate element ids or bad row widths.
  BinaryMatroid(std::string name, std::vector<std::string> elements, std::vector<Gf2Vec> rows);

  const std::string& name() const { return name_; }
  std::size_t size() const { return elements_.size(); }
  const std::string& element_id(std::uint32_t i) const { return elements_[i]; }
  std::optional<std::uint32_t> find_element(const std::string& id) const;
  std::uint32_t element(const std::string& id) const;  // throws PreconditionError
  const std::vector<Gf2Vec>& rows() const { return rows_; }

  std::size_t rank() const { return pivots_.size(); }
  const ElementSet& basis() const { return pivots_; }
  // Fundamental circuit of every non-basis element, in element order.
  const std::vector<ElementSet>& fundamental_circuits() const { return fundamental_; }

  std::size_t rank_of(const ElementSet& x) const;
  bool is_cycle(const ElementSet& x) const;
  bool is_circuit(const ElementSet& x) const;
  Gf2Vec indicator(const ElementSet& x) const;

  // Restriction to x; element i of the result is x[i].
  BinaryMatroid restrict_to(const ElementSet& x) const;

  // Equivalence classes of the common-circuit relation, sorted by first element.
  std::vector<ElementSet> blocks() const;
  bool connected() const { return blocks().size() <= 1; }

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<Gf2Vec> rows_;
  std::vector<Gf2Vec> columns_;  // reduced columns, dimension rank()
  ElementSet pivots_;
  std::vector<ElementSet> fundamental_;
};

BinaryMatroid from_graph(const Graph& g);

using IndependenceOracle = std::function<bool(const ElementSet&)>;

struct OracleBuild {
  BinaryMatroid matroid;
  std::size_t calls = 0;
};

// Representation from an independence oracle, at most |S|(r+1) calls.
// Throws PreconditionError on loops or when a spot check shows the oracle is not binary.
OracleBuild from_oracle(const IndependenceOracle& oracle, std::vector<std::string> elements, std::string name = "oracle");

// Text format: "matroid <name>", "elements <id>...", then "row <bits>" lines.
BinaryMatroid parse_matroid(std::istream& in);
std::string format_matroid(const BinaryMatroid& m);

struct MatroidBipartite {
  bool bipartite = true;
  std::vector<ElementSet> circuits;  // all-even basis, or one odd circuit
};

MatroidBipartite is_bipartite_matroid(const BinaryMatroid& m);

// Smallest circuit through both elements found by deletion; nullopt if they lie in different blocks.
std::optional<ElementSet> circuit_through_pair(const BinaryMatroid& m, std::uint32_t e, std::uint32_t f);

// m with an all-zero column p (last element) and an all-one row appended.
BinaryMatroid parity_extension(const BinaryMatroid& m);

// Preconditions: m connected and non-bipartite.
ElementSet odd_circuit_through(const BinaryMatroid& m, std::uint32_t e);

struct MatroidBasis {
  std::vector<ElementSet> circuits;
  std::vector<Gf2Vec> vectors;
};

// Preconditions: m connected and non-bipartite.
MatroidBasis odd_circuit_basis_matroid(const BinaryMatroid& m);

struct MatroidOddC3Cert {
  ElementSet c1;
  ElementSet c2;
};

Validation verify_matroid_oddc3(const BinaryMatroid& m, const MatroidOddC3Cert& cert);

// Preconditions: c1, c2 odd circuits in one block, meeting in an even number of elements.
MatroidOddC3Cert extract_oddc3_matroid(const BinaryMatroid& m, const ElementSet& c1, const ElementSet& c2);

struct MatroidBlockCert {
  enum class Kind { coloop, bipartite, basis };
  Kind kind = Kind::coloop;
  ElementSet elements;
  std::vector<ElementSet> circuits;
};

struct MatroidDecision {
  std::optional<MatroidOddC3Cert> obstruction;
  std::vector<MatroidBlockCert> blocks;
  bool is_free() const { return !obstruction.has_value(); }
};

MatroidDecision decide_oddc3_free_matroid(const BinaryMatroid& m);
Validation verify_matroid_free(const BinaryMatroid& m, const std::vector<MatroidBlockCert>& blocks);
Validation verify_matroid_bipartite(const BinaryMatroid& m, const MatroidBipartite& cert);

// The whole matroid is an odd-C3+ (exactly three circuits, with the parity pattern).
bool is_oddc3_matroid(const BinaryMatroid& m);

BinaryMatroid fano();

}  // namespace oddear
