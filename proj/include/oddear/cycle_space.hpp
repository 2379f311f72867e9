#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oddear/graph.hpp"
#include "oddear/paths.hpp"

namespace oddear {

class Gf2Vec {
 public:
  Gf2Vec() = default;
  explicit Gf2Vec(std::size_t dim) : dim_(dim), words_((dim + 63) / 64, 0) {}
  static Gf2Vec from_support(std::size_t dim, std::span<const std::uint32_t> support);

  std::size_t dim() const { return dim_; }
  bool get(std::size_t i) const { return ((words_[i / 64] >> (i % 64)) & 1ULL) != 0; }
  void set(std::size_t i, bool on = true);
  void flip(std::size_t i) { words_[i / 64] ^= 1ULL << (i % 64); }
  Gf2Vec& operator^=(const Gf2Vec& o);
  std::size_t weight() const;
  bool zero() const;
  std::optional<std::size_t> lowest() const;
  std::vector<std::uint32_t> support() const;
  const std::vector<std::uint64_t>& words() const { return words_; }
  bool operator==(const Gf2Vec& o) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> words_;
};

// Parity of the common support. Throws PreconditionError on a dimension mismatch.
Parity intersection_parity(const Gf2Vec& a, const Gf2Vec& b);

std::size_t gf2_rank(std::vector<Gf2Vec> rows);
bool same_span(const std::vector<Gf2Vec>& a, const std::vector<Gf2Vec>& b);

struct CircuitBasis {
  const Graph* host = nullptr;
  std::vector<Circuit> circuits;
  std::vector<Gf2Vec> vectors;
  std::size_t size() const { return circuits.size(); }
  void add(Circuit c);
};

Gf2Vec edge_vector(const Graph& g, std::span<const EdgeId> edges);

// Circuit formed by two internally disjoint paths with the same ends.
Circuit circuit_of(const Path& p, const Path& q);

// One fundamental circuit per non-tree edge. Throws PreconditionError unless
// `tree` is a spanning tree of the connected graph g.
CircuitBasis fundamental_basis(const Graph& g, std::span<const EdgeId> tree);
CircuitBasis fundamental_basis(const Graph& g);

// All members odd. Throws PreconditionError unless g is 2-connected and non-bipartite.
CircuitBasis odd_circuit_basis(const Graph& g);
CircuitBasis odd_circuit_basis(const Graph& g, const Circuit& start);

struct TotallyOdd {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> offending;
  explicit operator bool() const { return holds; }
};

// Throws PreconditionError when a member is even.
TotallyOdd is_totally_odd(const CircuitBasis& basis);

// Every circuit of the view, as sorted edge lists in lexicographic order.
// Throws ScaleBoundExceeded past `limit` circuits.
std::vector<std::vector<EdgeId>> all_circuits(const GraphView& g, std::size_t limit = 200000);

}  // namespace oddear
