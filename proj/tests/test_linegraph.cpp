#include <doctest.h>

#include <random>
#include <set>

#include "oddear/errors.hpp"
#include "oddear/linegraph.hpp"
#include "oddear/oracles.hpp"
#include "random_graphs.hpp"

using namespace oddear;

namespace {

std::set<std::pair<std::string, std::string>> named_edges(const Graph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    std::string x = g.vertex_id(a);
    std::string y = g.vertex_id(b);
    if (natural_less(y, x)) std::swap(x, y);
    out.insert({x, y});
  }
  return out;
}

// line_graph(root) equals g once root edges are read as g's vertices.
bool is_root_of(const Graph& root, const Graph& g) {
  Graph l = line_graph(root);
  if (l.vertex_count() != g.vertex_count()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!l.find_vertex(g.vertex_id(v))) return false;
  }
  return named_edges(l) == named_edges(g);
}

Graph claw() { return Graph::from_pairs("claw", 4, {{1, 2}, {1, 3}, {1, 4}}); }

}  // namespace

TEST_CASE("line graph construction") {
  Graph c5 = gen_cycle(5);
  Graph l = line_graph(c5);
  CHECK(l.vertex_count() == 5);
  CHECK(l.edge_count() == 5);
  CHECK(is_two_connected(l));
  Graph lc = line_graph(claw());
  CHECK(lc.edge_count() == 3);
  // every pair of C3+ edges shares an endpoint
  Graph l3 = line_graph(gen_c3plus());
  CHECK(l3.vertex_count() == 4);
  CHECK(l3.edge_count() == 6);
  CHECK(l3.is_simple());
}

TEST_CASE("root recognition") {
  Graph c5 = gen_cycle(5);
  auto r = recognize_line_graph(c5);
  REQUIRE(r);
  CHECK(is_root_of(*r, c5));
  CHECK(r->vertex_count() == 5);

  CHECK_FALSE(recognize_line_graph(claw()));
  Graph tri = gen_complete(3);
  auto rt = recognize_line_graph(tri);
  REQUIRE(rt);
  CHECK(is_root_of(*rt, tri));
  CHECK(rt->vertex_count() == 4);

  Graph lk4 = line_graph(gen_complete(4));
  auto rk = recognize_line_graph(lk4);
  REQUIRE(rk);
  CHECK(is_root_of(*rk, lk4));
  CHECK_THROWS_AS(recognize_line_graph(gen_c3plus()), PreconditionError);
}

TEST_CASE("pipeline verdicts") {
  auto v1 = h_perfect_line_pipeline(line_graph(gen_complete(4)));
  CHECK(v1.kind == LinePipelineVerdict::Kind::h_perfect);
  REQUIRE(v1.root);
  Graph lc5p = line_graph(gen_c5plus());
  auto v2 = h_perfect_line_pipeline(lc5p);
  REQUIRE(v2.kind == LinePipelineVerdict::Kind::not_h_perfect);
  REQUIRE(v2.obstruction);
  CHECK(verify_oddc3(*v2.root, *v2.obstruction));
  CHECK(h_perfect_line_pipeline(claw()).kind == LinePipelineVerdict::Kind::not_line_graph);
}

TEST_CASE("round trip on random simple roots") {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 400; ++iter) {
    int n = 2 + iter % 8;
    int max_m = n * (n - 1) / 2;
    int m = std::min(max_m, n - 1 + static_cast<int>(rng() % (max_m - n + 2)));
    Graph h = testing::random_multigraph(rng, n, m, true, true);
    Graph l = line_graph(h);
    auto r = recognize_line_graph(l);
    REQUIRE(r);
    CHECK(is_root_of(*r, l));
  }
}

TEST_CASE("recognition agrees with exhaustive root search") {
  std::mt19937 rng(43);
  int rejected = 0;
  for (int iter = 0; iter < 500; ++iter) {
    int n = 1 + iter % 8;
    int max_m = n * (n - 1) / 2;
    Graph g = testing::random_multigraph(rng, n, max_m == 0 ? 0 : static_cast<int>(rng() % (max_m + 1)), false, true);
    auto r = recognize_line_graph(g);
    CHECK(r.has_value() == oracle::has_line_graph_root(g));
    if (r) {
      CHECK(is_root_of(*r, g));
    } else {
      ++rejected;
    }
  }
  CHECK(rejected > 20);
}
