#include <doctest.h>

#include <random>
#include <sstream>

#include "oddear/errors.hpp"
#include "oddear/matroid.hpp"
#include "oddear/oddc3.hpp"
#include "oddear/oracles.hpp"
#include "random_graphs.hpp"

using namespace oddear;
using oddear::testing::random_matroid;

namespace {

// Brute force: some block has two odd circuits meeting in an even number of elements.
bool brute_has_even_pair(const BinaryMatroid& m) {
  auto cs = oracle::enum_matroid_circuits(m);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].size() % 2 == 0) continue;
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[j].size() % 2 == 0) continue;
      ElementSet both;
      std::set_intersection(cs[i].begin(), cs[i].end(), cs[j].begin(), cs[j].end(), std::back_inserter(both));
      if (both.size() % 2 != 0) continue;
      // same block: circuits share a block when linked through a chain of circuits
      for (const auto& b : m.blocks()) {
        if (std::binary_search(b.begin(), b.end(), cs[i][0]) && std::binary_search(b.begin(), b.end(), cs[j][0])) return true;
      }
    }
  }
  return false;
}

bool ones_in_row_space(const BinaryMatroid& m) {
  std::vector<Gf2Vec> rows = m.rows();
  std::size_t r = gf2_rank(rows);
  Gf2Vec ones(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) ones.set(i);
  rows.push_back(ones);
  return gf2_rank(rows) == r;
}

}  // namespace

TEST_CASE("Fano matroid") {
  auto f = fano();
  CHECK(f.rank() == 3);
  auto cs = oracle::enum_matroid_circuits(f);
  CHECK(cs.size() == 14);
  CHECK(f.connected());
  auto bip = is_bipartite_matroid(f);
  CHECK_FALSE(bip.bipartite);
  CHECK(verify_matroid_bipartite(f, bip));
  auto d = decide_oddc3_free_matroid(f);
  REQUIRE(d.is_free());
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0].kind == MatroidBlockCert::Kind::basis);
  CHECK(d.blocks[0].circuits.size() == 4);
  CHECK(verify_matroid_free(f, d.blocks));
  CHECK_FALSE(is_oddc3_matroid(f));
}

TEST_CASE("graphic matroids") {
  auto c5 = from_graph(gen_cycle(5));
  CHECK(c5.rank() == 4);
  CHECK(oracle::enum_matroid_circuits(c5).size() == 1);
  auto k4 = from_graph(gen_complete(4));
  CHECK(k4.rank() == 3);
  CHECK(oracle::enum_matroid_circuits(k4).size() == 7);
  CHECK(is_oddc3_matroid(from_graph(gen_c3plus())));
  CHECK(is_oddc3_matroid(from_graph(gen_c5plus())));
  CHECK_FALSE(is_oddc3_matroid(k4));
  CHECK_FALSE(is_oddc3_matroid(c5));
  CHECK(is_bipartite_matroid(from_graph(gen_cycle(6))).bipartite);
}

TEST_CASE("matroid circuit oracle matches graph circuits") {
  std::mt19937 rng(51);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 2 + iter % 6;
    Graph g = testing::random_multigraph(rng, n, n - 1 + static_cast<int>(rng() % 6), false);
    auto a = oracle::enum_circuits(g);
    auto b = oracle::enum_matroid_circuits(from_graph(g));
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("blocks") {
  // two triangles at a cut vertex plus a pendant edge
  Graph g = Graph::from_pairs("bow", 6, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 3}, {5, 6}});
  auto m = from_graph(g);
  auto bs = m.blocks();
  REQUIRE(bs.size() == 3);
  auto d = decide_oddc3_free_matroid(m);
  REQUIRE(d.is_free());
  CHECK(verify_matroid_free(m, d.blocks));
  int coloops = 0;
  for (const auto& b : d.blocks) coloops += b.kind == MatroidBlockCert::Kind::coloop ? 1 : 0;
  CHECK(coloops == 1);
}

TEST_CASE("graph and matroid verdicts agree") {
  std::mt19937 rng(53);
  int obstructed = 0;
  for (int iter = 0; iter < 400; ++iter) {
    Graph g = iter % 2 == 0 ? testing::random_two_connected(rng, 3 + iter % 9, iter % 4 == 0)
                            : testing::random_multigraph(rng, 2 + iter % 6, 2 + iter % 9, true);
    auto m = from_graph(g);
    auto gd = decide_oddc3_free(g);
    auto md = decide_oddc3_free_matroid(m);
    REQUIRE(gd.is_free() == md.is_free());
    CHECK(md.is_free() == !brute_has_even_pair(m));
    CHECK(is_bipartite_matroid(m).bipartite == is_bipartite(g).bipartite);
    if (md.obstruction) {
      ++obstructed;
      CHECK(verify_matroid_oddc3(m, *md.obstruction));
      ElementSet u;
      std::set_union(md.obstruction->c1.begin(), md.obstruction->c1.end(), md.obstruction->c2.begin(),
                     md.obstruction->c2.end(), std::back_inserter(u));
      CHECK(is_oddc3_matroid(m.restrict_to(u)));
    } else {
      CHECK(verify_matroid_free(m, md.blocks));
    }
  }
  CHECK(obstructed > 50);
}

TEST_CASE("random binary matroids") {
  std::mt19937 rng(57);
  int checked = 0;
  for (int iter = 0; iter < 300; ++iter) {
    auto m = random_matroid(rng, 2 + iter % 4, 4 + iter % 8);
    auto bip = is_bipartite_matroid(m);
    CHECK(verify_matroid_bipartite(m, bip));
    CHECK(bip.bipartite == ones_in_row_space(m));
    auto cs = oracle::enum_matroid_circuits(m);
    bool all_even = std::all_of(cs.begin(), cs.end(), [](const ElementSet& c) { return c.size() % 2 == 0; });
    CHECK(bip.bipartite == all_even);
    auto d = decide_oddc3_free_matroid(m);
    CHECK(d.is_free() == !brute_has_even_pair(m));
    if (d.obstruction) {
      CHECK(verify_matroid_oddc3(m, *d.obstruction));
    } else {
      CHECK(verify_matroid_free(m, d.blocks));
    }
    for (const auto& b : m.blocks()) {
      auto r = m.restrict_to(b);
      if (b.size() < 2 || is_bipartite_matroid(r).bipartite) continue;
      auto basis = odd_circuit_basis_matroid(r);
      CHECK(basis.circuits.size() == r.size() - r.rank());
      CHECK(gf2_rank(basis.vectors) == basis.vectors.size());
      for (const auto& c : basis.circuits) {
        CHECK(r.is_circuit(c));
        CHECK(c.size() % 2 == 1);
      }
      for (std::uint32_t e = 0; e < r.size(); ++e) {
        auto c = odd_circuit_through(r, e);
        CHECK(std::binary_search(c.begin(), c.end(), e));
        CHECK(c.size() % 2 == 1);
        CHECK(r.is_circuit(c));
      }
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("extraction from every even-meeting odd pair") {
  std::mt19937 rng(59);
  int extracted = 0;
  for (int iter = 0; iter < 60; ++iter) {
    auto m = random_matroid(rng, 3 + iter % 3, 6 + iter % 5);
    auto cs = oracle::enum_matroid_circuits(m);
    for (const auto& b : m.blocks()) {
      for (const auto& a : cs) {
        for (const auto& c : cs) {
          if (a == c || a.size() % 2 == 0 || c.size() % 2 == 0) continue;
          if (!std::binary_search(b.begin(), b.end(), a[0]) || !std::binary_search(b.begin(), b.end(), c[0])) continue;
          ElementSet both;
          std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(both));
          if (both.size() % 2 != 0) continue;
          auto cert = extract_oddc3_matroid(m, a, c);
          CHECK(verify_matroid_oddc3(m, cert));
          ++extracted;
        }
      }
    }
  }
  CHECK(extracted > 20);
}

TEST_CASE("extraction preconditions") {
  auto m = from_graph(gen_c3plus());
  auto cs = oracle::enum_matroid_circuits(m);
  ElementSet even;
  std::vector<ElementSet> odd;
  for (const auto& c : cs) {
    if (c.size() % 2 == 0) {
      even = c;
    } else {
      odd.push_back(c);
    }
  }
  REQUIRE(odd.size() == 2);
  CHECK(verify_matroid_oddc3(m, extract_oddc3_matroid(m, odd[0], odd[1])));
  CHECK_THROWS_AS(extract_oddc3_matroid(m, even, odd[0]), PreconditionError);
  CHECK_THROWS_AS(extract_oddc3_matroid(m, odd[0], odd[0]), PreconditionError);
  auto f = fano();
  auto fc = oracle::enum_matroid_circuits(f);
  // two Fano lines meet in exactly one point
  CHECK_THROWS_AS(extract_oddc3_matroid(f, fc[0], fc[1]), PreconditionError);
  CHECK_FALSE(verify_matroid_oddc3(f, MatroidOddC3Cert{fc[0], fc[1]}));
  CHECK_THROWS_AS(odd_circuit_basis_matroid(from_graph(gen_cycle(6))), PreconditionError);
}

TEST_CASE("independence oracle") {
  std::mt19937 rng(61);
  for (int iter = 0; iter < 100; ++iter) {
    auto hidden = random_matroid(rng, 2 + iter % 4, 3 + iter % 8);
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < hidden.size(); ++i) names.push_back(hidden.element_id(i));
    auto built = from_oracle([&](const ElementSet& x) { return hidden.rank_of(x) == x.size(); }, names);
    CHECK(built.calls <= hidden.size() * (hidden.rank() + 1));
    CHECK(built.matroid.rank() == hidden.rank());
    CHECK(oracle::enum_matroid_circuits(built.matroid) == oracle::enum_matroid_circuits(hidden));
  }
  // U(2,4) is not binary
  CHECK_THROWS_AS(from_oracle([](const ElementSet& x) { return x.size() <= 2; }, {"a", "b", "c", "d"}), PreconditionError);
  // free matroid: no circuits
  auto free = from_oracle([](const ElementSet&) { return true; }, {"a", "b", "c"});
  CHECK(free.matroid.rank() == 3);
  CHECK(free.matroid.fundamental_circuits().empty());
  CHECK_THROWS_AS(from_oracle([](const ElementSet& x) { return x.empty(); }, {"a"}), PreconditionError);
}

TEST_CASE("text format") {
  auto f = fano();
  std::istringstream in(format_matroid(f));
  auto g = parse_matroid(in);
  CHECK(format_matroid(g) == format_matroid(f));
  CHECK(g.name() == "F7");
  std::istringstream bad_len("matroid x\nelements a b\nrow 101\n");
  CHECK_THROWS_AS(parse_matroid(bad_len), ParseError);
  std::istringstream bad_char("matroid x\nelements a b\nrow 1x\n");
  CHECK_THROWS_AS(parse_matroid(bad_char), ParseError);
  std::istringstream loop("matroid x\nelements a b\nrow 10\n");
  CHECK_THROWS_AS(parse_matroid(loop), ParseError);
  std::istringstream missing("elements a b\n");
  CHECK_THROWS_AS(parse_matroid(missing), ParseError);
  CHECK_THROWS_AS(BinaryMatroid("x", {"a", "a"}, {}), PreconditionError);
}
