#include "oddear/oddc3.hpp"

#include <algorithm>
#include <set>

#include "oddear/errors.hpp"
#include "oddear/paths.hpp"

namespace oddear {

bool is_strict_shape(const OddC3Cert& c) {
  return !(c.paths[0].length() == 1 && c.paths[1].length() == 1 && c.paths[2].length() == 2);
}

Validation verify_oddc3(const Graph& g, const OddC3Cert& cert) {
  auto fail = [](std::string why) { return Validation{false, std::move(why)}; };
  if (cert.u >= g.vertex_count() || cert.v >= g.vertex_count() || cert.u == cert.v) return fail("bad ends");
  std::set<EdgeId> edges;
  std::set<VertexId> inner;
  for (int i = 0; i < 3; ++i) {
    const Path& p = cert.paths[i];
    if (!is_valid_path(g, p)) return fail("path " + std::to_string(i + 1) + " is not a path");
    if (p.front() != cert.u || p.back() != cert.v) return fail("path " + std::to_string(i + 1) + " does not join the ends");
    for (EdgeId e : p.edges) {
      if (!edges.insert(e).second) return fail("edge used twice");
    }
    for (std::size_t j = 1; j + 1 < p.vertices.size(); ++j) {
      if (!inner.insert(p.vertices[j]).second) return fail("paths share an internal vertex");
    }
  }
  if (!cert.paths[0].odd() || !cert.paths[1].odd()) return fail("first two paths must be odd");
  if (cert.paths[2].odd() || cert.paths[2].length() < 2) return fail("third path must be even with length at least 2");
  if (cert.strict != is_strict_shape(cert)) return fail("strict flag wrong");
  return {};
}

namespace {

OddC3Cert make_cert(VertexId u, VertexId v, Path odd_a, Path odd_b, Path even) {
  OddC3Cert c{u, v, {std::move(odd_a), std::move(odd_b), std::move(even)}, false};
  for (auto& p : c.paths) {
    if (p.front() != u) p = p.reversed();
  }
  c.strict = is_strict_shape(c);
  return c;
}

// Three u-v paths with parities {odd, odd, even} in any order.
OddC3Cert sort_paths(VertexId u, VertexId v, Path a, Path b, Path c) {
  std::array<Path, 3> all{std::move(a), std::move(b), std::move(c)};
  std::stable_partition(all.begin(), all.end(), [](const Path& p) { return p.odd(); });
  return make_cert(u, v, std::move(all[0]), std::move(all[1]), std::move(all[2]));
}

}  // namespace

OddC3Cert cert_from_paths(VertexId u, VertexId v, Path a, Path b, Path c) {
  return sort_paths(u, v, std::move(a), std::move(b), std::move(c));
}

OddC3Cert extract_from_even_pair(const Graph& g, const Circuit& c1, const Circuit& c2) {
  if (!is_valid_circuit(g, c1) || !is_valid_circuit(g, c2)) throw PreconditionError("extract: not circuits");
  if (!c1.odd() || !c2.odd()) throw PreconditionError("extract: circuits must be odd");
  std::set<EdgeId> e2(c2.edges.begin(), c2.edges.end());
  std::size_t common = 0;
  for (EdgeId e : c1.edges) common += e2.count(e);
  if (common % 2 != 0) throw PreconditionError("extract: circuits meet in an odd number of edges");

  std::set<VertexId> v2(c2.vertices.begin(), c2.vertices.end());
  std::vector<std::size_t> shared;  // positions on c1
  for (std::size_t i = 0; i < c1.vertices.size(); ++i) {
    if (v2.count(c1.vertices[i]) != 0) shared.push_back(i);
  }

  if (shared.size() >= 2) {
    // Split c1 at the shared vertices; some odd segment leaves c2.
    const std::size_t k = shared.size();
    for (std::size_t s = 0; s < k; ++s) {
      std::size_t from = shared[s];
      std::size_t to = shared[(s + 1) % k];
      Path seg = c1.arcs(from, to).first;
      bool inside = seg.length() == 1 && e2.count(seg.edges[0]) != 0;
      if (inside || !seg.odd()) continue;
      VertexId a = seg.front();
      VertexId b = seg.back();
      auto [arc1, arc2] = c2.arcs(*c2.position(a), *c2.position(b));
      return sort_paths(a, b, std::move(seg), std::move(arc1), std::move(arc2));
    }
    throw std::logic_error("extract: no odd segment outside the second circuit");
  }

  auto pair = two_disjoint_paths(g, c1.vertices, c2.vertices);
  if (!pair) throw PreconditionError("extract: graph is not 2-connected");
  const Path& p = pair->first;
  const Path& q = pair->second;
  auto [r1, r2] = c1.arcs(*c1.position(p.front()), *c1.position(q.front()));
  const std::size_t pq = p.length() + q.length();
  Path r = (r1.length() + pq) % 2 == 1 ? r1 : r2;
  // p2 -> p1 -> (R) -> q1 -> q2
  Path through = p.reversed().joined(r).joined(q);
  VertexId a = through.front();
  VertexId b = through.back();
  auto [arc1, arc2] = c2.arcs(*c2.position(a), *c2.position(b));
  return sort_paths(a, b, std::move(through), std::move(arc1), std::move(arc2));
}

namespace {

OddC3Cert lift_cert(const Subgraph& sub, const OddC3Cert& c) {
  OddC3Cert out{sub.lift_vertex(c.u), sub.lift_vertex(c.v), {sub.lift(c.paths[0]), sub.lift(c.paths[1]), sub.lift(c.paths[2])},
                c.strict};
  return out;
}

}  // namespace

OddC3Decision decide_oddc3_free(const Graph& g) {
  OddC3Decision out;
  auto bd = blocks(g);
  for (const auto& block : bd.blocks) {
    BlockCert bc;
    bc.edges = block;
    if (block.size() == 1) {
      bc.kind = BlockCert::Kind::bridge;
      out.free.blocks.push_back(std::move(bc));
      continue;
    }
    Subgraph sub = edge_induced(g, block);
    auto bip = is_bipartite(sub.graph);
    if (bip.bipartite) {
      bc.kind = BlockCert::Kind::bipartite;
      out.free.blocks.push_back(std::move(bc));
      continue;
    }
    auto basis = odd_circuit_basis(sub.graph, bip.odd_circuit);
    auto check = is_totally_odd(basis);
    if (!check) {
      auto [i, j] = *check.offending;
      out.obstruction = lift_cert(sub, extract_from_even_pair(sub.graph, basis.circuits[i], basis.circuits[j]));
      out.free.blocks.clear();
      return out;
    }
    bc.kind = BlockCert::Kind::basis;
    for (const auto& c : basis.circuits) bc.circuits.push_back(sub.lift(c));
    out.free.blocks.push_back(std::move(bc));
  }
  return out;
}

Validation verify_free(const Graph& g, const FreeCert& cert) {
  auto fail = [](std::string why) { return Validation{false, std::move(why)}; };
  auto bd = blocks(g);
  std::vector<std::vector<EdgeId>> given;
  for (const auto& b : cert.blocks) {
    auto e = b.edges;
    std::sort(e.begin(), e.end());
    for (EdgeId x : e) {
      if (x >= g.edge_count()) return fail("unknown edge");
    }
    given.push_back(std::move(e));
  }
  std::sort(given.begin(), given.end());
  if (given != bd.blocks) return fail("blocks do not match the graph");
  for (const auto& b : cert.blocks) {
    if (b.kind == BlockCert::Kind::bridge) {
      if (b.edges.size() != 1) return fail("bridge block with several edges");
      continue;
    }
    Subgraph sub = edge_induced(g, b.edges);
    if (b.kind == BlockCert::Kind::bipartite) {
      if (!is_bipartite(sub.graph).bipartite) return fail("block labelled bipartite has an odd circuit");
      continue;
    }
    std::set<EdgeId> inside(b.edges.begin(), b.edges.end());
    CircuitBasis basis{&g, {}, {}};
    for (const auto& c : b.circuits) {
      if (!is_valid_circuit(g, c)) return fail("basis member is not a circuit");
      if (!c.odd()) return fail("basis member is even");
      for (EdgeId e : c.edges) {
        if (inside.count(e) == 0) return fail("basis member leaves its block");
      }
      basis.add(c);
    }
    if (basis.size() != cyclomatic_number(sub.graph)) return fail("basis has the wrong size");
    if (gf2_rank(basis.vectors) != basis.size()) return fail("basis is dependent");
    if (!is_totally_odd(basis)) return fail("basis is not totally odd");
  }
  return {};
}

std::optional<OddC3Cert> find_strict_oddc3(const Graph& h) {
  std::set<std::pair<VertexId, VertexId>> tried;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto [a, b] = h.endpoints(e);
    if (a > b) std::swap(a, b);
    if (!tried.insert({a, b}).second) continue;
    std::optional<EdgeId> twin;
    for (const auto& inc : h.incident(a)) {
      if (inc.neighbor == b && inc.edge != e) {
        twin = inc.edge;
        break;
      }
    }
    if (!twin) continue;
    auto even = even_path_ge4(h, a, b);
    if (!even) continue;
    return make_cert(a, b, Path{{a, b}, {e}}, Path{{a, b}, {*twin}}, *even);
  }
  SimpleGraph s = underlying_simple(h);
  auto d = decide_oddc3_free(s.graph);
  if (d.is_free()) return std::nullopt;
  OddC3Cert c = *d.obstruction;
  for (auto& p : c.paths) {
    for (auto& e : p.edges) e = s.representative[e];
  }
  c.strict = is_strict_shape(c);
  return c;
}

HPerfectVerdict line_graph_h_perfect(const Graph& h) {
  auto cert = find_strict_oddc3(h);
  return HPerfectVerdict{!cert.has_value(), cert};
}

}  // namespace oddear
