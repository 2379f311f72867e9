#include <doctest.h>

#include <random>

#include "oddear/cycle_space.hpp"
#include "oddear/errors.hpp"
#include "oddear/oracles.hpp"
#include "random_graphs.hpp"

using namespace oddear;

namespace {

std::vector<EdgeId> sorted_edges(const Circuit& c) {
  std::vector<EdgeId> e = c.edges;
  std::sort(e.begin(), e.end());
  return e;
}

void check_basis_shape(const Graph& g, const CircuitBasis& b) {
  CHECK(b.size() == cyclomatic_number(g));
  CHECK(gf2_rank(b.vectors) == b.size());
  for (const auto& c : b.circuits) CHECK(is_valid_circuit(g, c));
}

}  // namespace

TEST_CASE("fundamental bases") {
  Graph k4 = gen_complete(4);
  std::vector<EdgeId> star{k4.edge("e1"), k4.edge("e2"), k4.edge("e3")};
  auto b = fundamental_basis(k4, star);
  REQUIRE(b.size() == 3);
  for (const auto& c : b.circuits) {
    CHECK(c.length() == 3);
    CHECK(c.position(k4.vertex("1")).has_value());
  }
  auto c5 = fundamental_basis(gen_cycle(5));
  CHECK(c5.size() == 1);
  Graph path = Graph::from_pairs("p", 3, {{1, 2}, {2, 3}});
  CHECK(fundamental_basis(path).size() == 0);
  std::vector<EdgeId> not_tree{k4.edge("e1"), k4.edge("e2")};
  CHECK_THROWS_AS(fundamental_basis(k4, not_tree), PreconditionError);
}

TEST_CASE("odd circuit bases") {
  Graph k4 = gen_complete(4);
  auto b = odd_circuit_basis(k4);
  check_basis_shape(k4, b);
  for (const auto& c : b.circuits) CHECK(c.length() == 3);
  CHECK(is_totally_odd(b));

  Graph c5 = gen_cycle(5);
  auto bc = odd_circuit_basis(c5);
  CHECK(bc.size() == 1);
  CHECK(is_totally_odd(bc));

  Graph c5p = gen_c5plus();
  auto bp = odd_circuit_basis(c5p);
  check_basis_shape(c5p, bp);
  std::vector<std::size_t> lens;
  for (const auto& c : bp.circuits) lens.push_back(c.length());
  std::sort(lens.begin(), lens.end());
  CHECK(lens == std::vector<std::size_t>{3, 5});
  auto t = is_totally_odd(bp);
  CHECK_FALSE(t);
  REQUIRE(t.offending);

  CHECK_THROWS_AS(odd_circuit_basis(gen_cycle(4)), PreconditionError);
  CHECK_THROWS_AS(odd_circuit_basis(Graph::from_pairs("p", 3, {{1, 2}, {2, 3}})), PreconditionError);
}

TEST_CASE("intersection parity") {
  Graph k4 = gen_complete(4);
  std::vector<EdgeId> t123{k4.edge("e1"), k4.edge("e4"), k4.edge("e2")};
  std::vector<EdgeId> t124{k4.edge("e1"), k4.edge("e5"), k4.edge("e3")};
  auto a = edge_vector(k4, t123);
  auto b = edge_vector(k4, t124);
  CHECK(intersection_parity(a, a) == Parity::odd);
  CHECK(intersection_parity(a, b) == Parity::odd);
  CHECK(intersection_parity(a, Gf2Vec(6)) == Parity::even);
  CHECK_THROWS_AS(intersection_parity(a, Gf2Vec(7)), PreconditionError);
}

TEST_CASE("circuit enumeration agrees with the cycle-space oracle") {
  CHECK(all_circuits(gen_complete(4)).size() == 7);
  CHECK(all_circuits(gen_c3plus()).size() == 3);
  std::mt19937 rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    Graph g = testing::random_multigraph(rng, 2 + iter % 6, 1 + iter % 12, false);
    CHECK(all_circuits(g) == oracle::enum_circuits(g));
  }
}

TEST_CASE("odd bases on random graphs") {
  std::mt19937 rng(23);
  int checked = 0;
  for (int iter = 0; iter < 400 && checked < 150; ++iter) {
    Graph g = testing::random_two_connected(rng, 4 + iter % 16, iter % 3 == 0);
    if (!is_two_connected(g) || is_bipartite(g).bipartite) continue;
    ++checked;
    auto b = odd_circuit_basis(g);
    check_basis_shape(g, b);
    for (const auto& c : b.circuits) CHECK(c.odd());
    CHECK(same_span(b.vectors, fundamental_basis(g).vectors));

    // Totally odd bases make every odd cycle of the span meet every other oddly.
    if (!is_totally_odd(b)) continue;
    std::vector<Gf2Vec> odd_cycles;
    for (int s = 0; s < 120; ++s) {
      Gf2Vec v(g.edge_count());
      for (std::size_t i = 0; i < b.size(); ++i) {
        if ((rng() & 1U) != 0) v ^= b.vectors[i];
      }
      if (v.weight() % 2 == 1) odd_cycles.push_back(v);
    }
    for (std::size_t i = 0; i < odd_cycles.size(); ++i) {
      for (std::size_t j = i + 1; j < odd_cycles.size(); ++j) {
        CHECK(intersection_parity(odd_cycles[i], odd_cycles[j]) == Parity::odd);
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("a basis circuit lists its edges in walk order") {
  Graph k4 = gen_complete(4);
  auto b = odd_circuit_basis(k4);
  for (const auto& c : b.circuits) {
    auto s = sorted_edges(c);
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
  }
}
