#include "oddear/tok4.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "oddear/beta_phi.hpp"
#include "oddear/cycle_space.hpp"
#include "oddear/errors.hpp"
#include "oddear/oracles.hpp"
#include "oddear/paths.hpp"

namespace oddear {

namespace {

Validation fail(std::string why) { return Validation{false, std::move(why)}; }

// Vertices i..j of p (reversed when i > j).
Path segment(const Path& p, std::size_t i, std::size_t j) {
  Path out;
  if (i <= j) {
    out.vertices.assign(p.vertices.begin() + static_cast<std::ptrdiff_t>(i), p.vertices.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    out.edges.assign(p.edges.begin() + static_cast<std::ptrdiff_t>(i), p.edges.begin() + static_cast<std::ptrdiff_t>(j));
    return out;
  }
  return segment(p, j, i).reversed();
}

std::optional<std::size_t> index_in(const Path& p, VertexId v) {
  auto it = std::find(p.vertices.begin(), p.vertices.end(), v);
  if (it == p.vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - p.vertices.begin());
}

// Paths share no edge and no interior vertex; interiors avoid `ends`.
Validation disjoint_interiors(std::span<const Path> paths, std::span<const VertexId> ends) {
  std::set<VertexId> inner;
  std::set<EdgeId> used;
  for (const auto& p : paths) {
    for (auto e : p.edges) {
      if (!used.insert(e).second) return fail("paths share an edge");
    }
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      VertexId x = p.vertices[i];
      if (std::find(ends.begin(), ends.end(), x) != ends.end()) return fail("path passes through an end vertex");
      if (!inner.insert(x).second) return fail("paths share an internal vertex");
    }
  }
  return {};
}

// Up to k internally disjoint x-y paths (unit vertex capacities, shortest augmentations).
std::vector<Path> disjoint_paths(const GraphView& view, VertexId x, VertexId y, int k) {
  const Graph& g = view.graph();
  struct Arc {
    std::size_t to;
    int cap;
    int orig;
    std::size_t rev;
    std::optional<EdgeId> edge;
  };
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Arc>> arcs(2 * n);
  auto add = [&](std::size_t a, std::size_t b, int cap, std::optional<EdgeId> e) {
    arcs[a].push_back({b, cap, cap, arcs[b].size(), e});
    arcs[b].push_back({a, 0, 0, arcs[a].size() - 1, e});
  };
  for (VertexId v = 0; v < n; ++v) {
    if (view.has_vertex(v)) add(2 * v, 2 * v + 1, v == x || v == y ? k : 1, std::nullopt);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!view.has_edge(e)) continue;
    auto [a, b] = g.endpoints(e);
    add(2 * a + 1, 2 * b, 1, e);
    add(2 * b + 1, 2 * a, 1, e);
  }
  const std::size_t source = 2 * x + 1;
  const std::size_t sink = 2 * y;
  int flow = 0;
  while (flow < k) {
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> via(2 * n);
    std::deque<std::size_t> q{source};
    std::vector<char> seen(2 * n, 0);
    seen[source] = 1;
    while (!q.empty() && seen[sink] == 0) {
      auto a = q.front();
      q.pop_front();
      for (std::size_t i = 0; i < arcs[a].size(); ++i) {
        const auto& arc = arcs[a][i];
        if (arc.cap <= 0 || seen[arc.to] != 0) continue;
        seen[arc.to] = 1;
        via[arc.to] = std::pair{a, i};
        q.push_back(arc.to);
      }
    }
    if (seen[sink] == 0) break;
    for (std::size_t b = sink; b != source;) {
      auto [a, i] = *via[b];
      arcs[a][i].cap -= 1;
      arcs[b][arcs[a][i].rev].cap += 1;
      b = a;
    }
    ++flow;
  }
  std::vector<Path> out;
  for (int f = 0; f < flow; ++f) {
    Path p{{x}, {}};
    std::size_t at = source;
    while (at != sink) {
      bool moved = false;
      for (auto& arc : arcs[at]) {
        if (arc.orig - arc.cap <= 0) continue;
        arc.cap += 1;
        at = arc.to;
        if (arc.edge) {
          VertexId w = static_cast<VertexId>(at / 2);
          if (auto pos = index_in(p, w)) {
            p.vertices.resize(*pos + 1);
            p.edges.resize(*pos);
          } else {
            p.vertices.push_back(w);
            p.edges.push_back(*arc.edge);
          }
        }
        moved = true;
        break;
      }
      if (!moved) throw std::logic_error("disjoint_paths: flow decomposition failed");
      if (at % 2 == 0 && at != sink) at += 1;
    }
    out.push_back(std::move(p));
  }
  return out;
}

OddThetaCert make_theta(VertexId u, VertexId v, Path a, Path b, Path c) {
  OddThetaCert t{u, v, {std::move(a), std::move(b), std::move(c)}};
  for (auto& p : t.paths) {
    if (p.front() != u) p = p.reversed();
  }
  return t;
}

bool on_theta(const OddThetaCert& t, VertexId x) {
  return std::any_of(t.paths.begin(), t.paths.end(), [&](const Path& p) { return index_in(p, x).has_value(); });
}

// Odd theta of the bipartite g through target, built from t and two {target, V(t)}-paths.
OddThetaCert absorb(const GraphView& view, const std::vector<std::int8_t>& color, const OddThetaCert& t, VertexId target) {
  if (on_theta(t, target)) return t;
  std::vector<VertexId> tv;
  for (const auto& p : t.paths) tv.insert(tv.end(), p.vertices.begin(), p.vertices.end());
  std::sort(tv.begin(), tv.end());
  tv.erase(std::unique(tv.begin(), tv.end()), tv.end());
  VertexId s[1] = {target};
  auto fan = two_disjoint_paths(view, s, tv);
  if (!fan) throw PreconditionError("find_odd_theta_through: graph is not 2-connected");
  Path w = fan->first.reversed().joined(fan->second);  // y1 -> target -> y2
  VertexId y1 = w.front();
  VertexId y2 = w.back();
  for (std::size_t i = 0; i < 3; ++i) {
    auto a = index_in(t.paths[i], y1);
    auto b = index_in(t.paths[i], y2);
    if (!a || !b) continue;
    // Reroute path i through w.
    Path route = w;
    if (*a > *b) {
      std::swap(a, b);
      route = route.reversed();
    }
    const Path& p = t.paths[i];
    Path np = segment(p, 0, *a).joined(route).joined(segment(p, *b, p.vertices.size() - 1));
    std::array<Path, 3> ps = t.paths;
    ps[i] = np;
    return make_theta(t.u, t.v, ps[0], ps[1], ps[2]);
  }
  // y1 and y2 inside different paths i and j.
  std::size_t i = 0;
  std::size_t j = 0;
  for (std::size_t r = 0; r < 3; ++r) {
    if (index_in(t.paths[r], y1)) i = r;
    if (index_in(t.paths[r], y2)) j = r;
  }
  const std::size_t k = 3 - i - j;
  const bool from_u = color[t.u] != color[y2];
  const Path pi = from_u ? t.paths[i] : t.paths[i].reversed();
  const Path pj = from_u ? t.paths[j] : t.paths[j].reversed();
  const Path pk = from_u ? t.paths[k] : t.paths[k].reversed();
  const VertexId x = pi.front();
  Path a = segment(pj, 0, *index_in(pj, y2));
  Path b = segment(pi, 0, *index_in(pi, y1)).joined(w);
  Path c = pk.joined(segment(pj, pj.vertices.size() - 1, *index_in(pj, y2)));
  return make_theta(x, y2, a, b, c);
}

// Any odd theta of the bipartite view through target, by 3-path flows between opposite-colour pairs.
std::optional<OddThetaCert> theta_in(const GraphView& view, const std::vector<std::int8_t>& color, VertexId target) {
  const Graph& g = view.graph();
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!view.has_edge(e)) continue;
    ++deg[g.endpoints(e).first];
    ++deg[g.endpoints(e).second];
  }
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (deg[x] < 3) continue;
    for (VertexId y = x + 1; y < g.vertex_count(); ++y) {
      if (deg[y] < 3 || color[x] == color[y]) continue;
      auto ps = disjoint_paths(view, x, y, 3);
      if (ps.size() == 3) return absorb(view, color, make_theta(x, y, ps[0], ps[1], ps[2]), target);
    }
  }
  return std::nullopt;
}

// sides[k] joins br[kTok4Pairs[k]]: a TOK4 when all sides are odd, else an odd-C3+ inside.
OddC3OrTok4 resolve_k4(const std::array<VertexId, 4>& br, const std::array<Path, 6>& sides) {
  if (std::all_of(sides.begin(), sides.end(), [](const Path& p) { return p.odd(); })) return Tok4Cert{br, sides};
  auto side = [&](int a, int b) {
    for (std::size_t k = 0; k < 6; ++k) {
      if (kTok4Pairs[k] == std::pair{a, b}) return sides[k];
      if (kTok4Pairs[k] == std::pair{b, a}) return sides[k].reversed();
    }
    throw std::logic_error("resolve_k4: bad pair");
  };
  // Each odd-C3+ candidate is K4 minus one side.
  for (const auto& [i, j] : kTok4Pairs) {
    std::array<int, 2> rest{};
    int at = 0;
    for (int r = 0; r < 4; ++r) {
      if (r != i && r != j) rest[at++] = r;
    }
    auto [x, y] = rest;
    Path direct = side(x, y);
    Path via_i = side(x, i).joined(side(i, y));
    Path via_j = side(x, j).joined(side(j, y));
    int odd = (direct.odd() ? 1 : 0) + (via_i.odd() ? 1 : 0) + (via_j.odd() ? 1 : 0);
    if (odd == 2) return cert_from_paths(br[x], br[y], direct, via_i, via_j);
  }
  throw std::logic_error("resolve_k4: no odd-C3+ in an odd K4 subdivision");
}

}  // namespace

Validation verify_odd_theta(const Graph& g, const OddThetaCert& t) {
  if (t.u == t.v) return fail("theta ends coincide");
  for (const auto& p : t.paths) {
    if (!is_valid_path(g, p)) return fail("theta member is not a path");
    if (p.front() != t.u || p.back() != t.v) return fail("theta path does not join the ends");
    if (!p.odd()) return fail("theta path is even");
  }
  VertexId ends[2] = {t.u, t.v};
  return disjoint_interiors(t.paths, ends);
}

Validation verify_tok4(const Graph& g, const Tok4Cert& c) {
  std::set<VertexId> b(c.branch.begin(), c.branch.end());
  if (b.size() != 4) return fail("branch vertices must be distinct");
  for (std::size_t k = 0; k < 6; ++k) {
    const auto& p = c.paths[k];
    if (!is_valid_path(g, p)) return fail("side " + std::to_string(k) + " is not a path");
    auto [i, j] = kTok4Pairs[k];
    if (p.front() != c.branch[i] || p.back() != c.branch[j]) return fail("side " + std::to_string(k) + " has wrong ends");
    if (!p.odd()) return fail("side " + std::to_string(k) + " is even");
  }
  return disjoint_interiors(c.paths, c.branch);
}

OddThetaCert find_odd_theta_through(const Graph& g, std::span<const EdgeId> h_sub, const Path& p, VertexId target) {
  auto bip = is_bipartite(g);
  if (!bip.bipartite) throw PreconditionError("find_odd_theta_through: graph is not bipartite");
  if (!is_valid_path(g, p) || !p.odd()) throw PreconditionError("find_odd_theta_through: ear must be an odd path");
  if (target >= g.vertex_count()) throw PreconditionError("find_odd_theta_through: target out of range");
  Subgraph h = edge_induced(g, h_sub);
  std::optional<VertexId> lu;
  std::optional<VertexId> lv;
  for (VertexId x = 0; x < h.graph.vertex_count(); ++x) {
    VertexId px = h.lift_vertex(x);
    if (px == p.front()) lu = x;
    if (px == p.back()) lv = x;
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      if (p.vertices[i] == px) throw PreconditionError("find_odd_theta_through: ear interior meets the subgraph");
    }
  }
  for (auto e : p.edges) {
    if (std::find(h_sub.begin(), h_sub.end(), e) != h_sub.end()) throw PreconditionError("find_odd_theta_through: ear edge in the subgraph");
  }
  if (!lu || !lv) throw PreconditionError("find_odd_theta_through: ear ends outside the subgraph");
  VertexId s[1] = {*lu};
  VertexId t[1] = {*lv};
  auto qr = two_disjoint_paths(h.graph, s, t);
  if (!qr) throw PreconditionError("find_odd_theta_through: subgraph is not 2-connected");
  // Bipartite host: the two paths share the ear's parity.
  OddThetaCert theta = make_theta(p.front(), p.back(), p, h.lift(qr->first), h.lift(qr->second));
  auto out = absorb(g, bip.color, theta, target);
  if (auto v = verify_odd_theta(g, out); !v) throw std::logic_error("find_odd_theta_through: " + v.reason);
  return out;
}

OddC3OrTok4 oddc3_or_tok4_from_three_paths(const Graph& g, const Circuit& c, VertexId v, const std::array<Path, 3>& paths) {
  if (!is_valid_circuit(g, c) || !c.odd()) throw PreconditionError("three paths: c must be an odd circuit");
  if (c.position(v)) throw PreconditionError("three paths: v lies on c");
  std::array<Path, 3> ps = paths;
  std::array<VertexId, 3> at{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!is_valid_path(g, ps[i]) || !ps[i].odd()) throw PreconditionError("three paths: members must be odd paths");
    if (ps[i].front() != v) ps[i] = ps[i].reversed();
    if (ps[i].front() != v || !c.position(ps[i].back())) throw PreconditionError("three paths: paths must join v to c");
    for (std::size_t j = 1; j + 1 < ps[i].vertices.size(); ++j) {
      if (c.position(ps[i].vertices[j])) throw PreconditionError("three paths: interior meets c");
    }
    at[i] = ps[i].back();
  }
  VertexId ends[1] = {v};
  if (auto d = disjoint_interiors(ps, ends); !d) throw PreconditionError("three paths: " + d.reason);
  std::set<VertexId> distinct(at.begin(), at.end());
  if (distinct.size() == 3) {
    std::array<std::size_t, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return *c.position(at[a]) < *c.position(at[b]); });
    auto p0 = *c.position(at[order[0]]);
    auto p1 = *c.position(at[order[1]]);
    auto p2 = *c.position(at[order[2]]);
    std::array<VertexId, 4> br{v, at[order[0]], at[order[1]], at[order[2]]};
    std::array<Path, 6> sides{ps[order[0]], ps[order[1]], ps[order[2]], c.arcs(p0, p1).first, c.arcs(p0, p2).second,
                              c.arcs(p1, p2).first};
    return resolve_k4(br, sides);
  }
  if (distinct.size() == 2) {
    // Two paths share the end u; the third ends at s.
    std::size_t lone = at[0] == at[1] ? 2 : (at[0] == at[2] ? 1 : 0);
    VertexId s = at[lone];
    VertexId u = at[(lone + 1) % 3];
    auto [f, b] = c.arcs(*c.position(s), *c.position(u));
    Path q = f.odd() ? f : b;
    return cert_from_paths(u, v, ps[(lone + 1) % 3], ps[(lone + 2) % 3], ps[lone].joined(q));
  }
  // All three end at u: escape from c to the paths avoiding u.
  VertexId u = at[0];
  std::vector<std::uint8_t> keep(g.vertex_count(), 1);
  keep[u] = 0;
  std::vector<VertexId> from;
  for (auto x : c.vertices) {
    if (x != u) from.push_back(x);
  }
  std::vector<VertexId> to;
  for (const auto& p : ps) {
    for (auto x : p.vertices) {
      if (x != u) to.push_back(x);
    }
  }
  std::sort(to.begin(), to.end());
  to.erase(std::unique(to.begin(), to.end()), to.end());
  auto q = connecting_path(GraphView(g, {}, keep), from, to);
  if (!q) throw PreconditionError("three paths: graph is not 2-connected");
  VertexId t = q->back();
  std::size_t hit = 0;
  while (!index_in(ps[hit], t)) ++hit;
  Path back_to_v = segment(ps[hit], *index_in(ps[hit], t), 0);
  auto [f, b] = c.arcs(*c.position(u), *c.position(q->front()));
  Path r = (f.length() + back_to_v.length() + q->length()) % 2 == 0 ? f : b;
  Path third = r.joined(*q).joined(back_to_v);
  return cert_from_paths(u, v, ps[(hit + 1) % 3], ps[(hit + 2) % 3], third);
}

namespace {

// G with the circuit c identified to one vertex; chords of c are dropped.
struct Contraction {
  Graph h;
  VertexId hub = 0;
  std::vector<VertexId> to_h;               // G vertex -> H vertex
  std::vector<VertexId> from_h;             // H vertex -> G vertex (hub: unused)
  std::vector<EdgeId> h_to_g;               // H edge -> G edge
  std::vector<std::optional<EdgeId>> g_to_h;
};

Contraction contract(const Graph& g, const Circuit& c) {
  Contraction k;
  std::vector<char> in_c(g.vertex_count(), 0);
  for (auto v : c.vertices) in_c[v] = 1;
  std::string hub = "[C]";
  while (g.find_vertex(hub)) hub += "'";
  std::vector<std::string> names;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_c[v] == 0) names.push_back(g.vertex_id(v));
  }
  names.push_back(hub);
  auto name_of = [&](VertexId v) { return in_c[v] != 0 ? hub : g.vertex_id(v); };
  std::vector<EdgeSpec> es;
  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    if (in_c[a] != 0 && in_c[b] != 0) continue;
    kept.push_back(e);
    es.push_back({g.edge_id(e), name_of(a), name_of(b)});
  }
  k.h = Graph(g.name() + "/C", std::move(names), std::move(es));
  k.hub = k.h.vertex(hub);
  k.to_h.assign(g.vertex_count(), k.hub);
  k.from_h.assign(k.h.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_c[v] != 0) continue;
    k.to_h[v] = k.h.vertex(g.vertex_id(v));
    k.from_h[k.to_h[v]] = v;
  }
  k.g_to_h.assign(g.edge_count(), std::nullopt);
  k.h_to_g.assign(k.h.edge_count(), 0);
  for (auto e : kept) {
    EdgeId he = k.h.edge(g.edge_id(e));
    k.g_to_h[e] = he;
    k.h_to_g[he] = e;
  }
  return k;
}

// An H path ending at the hub, read back in G.
Path lift_to_g(const Graph& g, const Contraction& k, const Path& p) {
  Path out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    VertexId x = p.vertices[i];
    EdgeId e = k.h_to_g[p.edges[i]];
    if (i == 0) out.vertices.push_back(k.from_h[x]);
    out.edges.push_back(e);
    out.vertices.push_back(g.opposite(e, out.vertices.back()));
  }
  return out;
}

// An odd path of G with both ends on c, other vertices off it: with c it forms an odd-C3+.
OddC3Cert chord_cert(const Circuit& c, const Path& p) {
  auto [f, b] = c.arcs(*c.position(p.front()), *c.position(p.back()));
  return cert_from_paths(p.front(), p.back(), p, f, b);
}

// An odd circuit of the contraction gives an odd-C3+ of G.
OddC3Cert contraction_cert(const Graph& g, const Contraction& k, const Circuit& c, const Circuit& d) {
  std::vector<EdgeId> es;
  for (auto e : d.edges) es.push_back(k.h_to_g[e]);
  if (auto dc = circuit_from_edges(g, es)) return extract_from_even_pair(g, *dc, c);
  return chord_cert(c, *path_from_edges(g, es));
}

bool is_basic(const Graph& g) {
  auto bip = is_bipartite(g);
  if (!bip.bipartite) return false;
  // Per component, one colour class consists of degree-2 vertices.
  std::vector<int> comp(g.vertex_count(), -1);
  int count = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::deque<VertexId> q{s};
    comp[s] = count;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop_front();
      for (const auto& inc : g.incident(x)) {
        if (comp[inc.neighbor] < 0) {
          comp[inc.neighbor] = count;
          q.push_back(inc.neighbor);
        }
      }
    }
    ++count;
  }
  std::vector<std::array<bool, 2>> all_two(count, {true, true});
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) all_two[comp[v]][bip.color[v]] = false;
  }
  return std::all_of(all_two.begin(), all_two.end(), [](const auto& a) { return a[0] || a[1]; });
}

Graph without_edge(const Graph& g, EdgeId e) {
  std::vector<std::uint8_t> mask(g.edge_count(), 1);
  mask[e] = 0;
  return materialize(GraphView(g, mask)).graph;
}

}  // namespace

Tok4Verdict detect_tok4(const Graph& g, std::size_t max_edges) {
  if (!g.is_simple()) throw PreconditionError("detect_tok4: graph must be simple");
  if (!is_two_connected(g)) throw PreconditionError("detect_tok4: graph must be 2-connected");
  if (g.edge_count() > max_edges) throw ScaleBoundExceeded("detect_tok4: exact ear search is limited to " + std::to_string(max_edges) + " edges");
  Tok4Verdict out;
  auto dec = decide_oddc3_free(g);
  if (dec.obstruction) {
    out.kind = Tok4Verdict::Kind::breach;
    out.breach = dec.obstruction;
    return out;
  }
  auto best = max_odd_ears(g, max_edges);
  out.phibar = best.value;
  out.bipartite = is_bipartite(g).bipartite;
  if (out.bipartite || best.value <= 1) return out;
  auto breach = [&](OddC3Cert cert) {
    out.kind = Tok4Verdict::Kind::breach;
    out.breach = std::move(cert);
    return out;
  };
  auto d = optimal_first_ear_odd(g, best.witness, max_edges);
  const Circuit& c = d.circuit;
  auto k = contract(g, c);
  auto hb = is_bipartite(k.h);
  if (!hb.bipartite) return breach(contraction_cert(g, k, c, hb.odd_circuit));
  // An odd ear gives an odd theta through the hub.
  std::size_t i = 1;
  while (!d.ear_odd(i)) ++i;
  const Path& ear = d.paths[i - 1];
  if (!k.g_to_h[ear.edges.front()]) return breach(chord_cert(c, ear));
  Path ph;
  for (std::size_t j = 0; j < ear.vertices.size(); ++j) ph.vertices.push_back(k.to_h[ear.vertices[j]]);
  for (auto e : ear.edges) ph.edges.push_back(*k.g_to_h[e]);
  if (ph.front() == ph.back()) throw std::logic_error("detect_tok4: odd closed ear in a bipartite contraction");
  std::vector<EdgeId> block;
  for (const auto& b : blocks(k.h).blocks) {
    if (std::binary_search(b.begin(), b.end(), ph.edges.front())) block = b;
  }
  std::vector<EdgeId> hsub;
  for (std::size_t j = 1; j < i; ++j) {
    const auto& es = d.ear_edges(j);
    if (!k.g_to_h[es.front()] || !std::binary_search(block.begin(), block.end(), *k.g_to_h[es.front()])) continue;
    for (auto e : es) hsub.push_back(*k.g_to_h[e]);
  }
  std::sort(hsub.begin(), hsub.end());
  std::optional<OddThetaCert> theta;
  try {
    theta = find_odd_theta_through(k.h, hsub, ph, k.hub);
  } catch (const PreconditionError&) {
    std::vector<std::uint8_t> mask(k.h.edge_count(), 0);
    for (auto e : block) mask[e] = 1;
    theta = theta_in(GraphView(k.h, mask), hb.color, k.hub);
  }
  if (!theta) throw std::logic_error("detect_tok4: no odd theta in the ear's block");
  // The hub must be an end of the theta.
  if (theta->u != k.hub && theta->v != k.hub) throw std::logic_error("detect_tok4: hub is not an end of the odd theta");
  VertexId other = theta->u == k.hub ? theta->v : theta->u;
  std::array<Path, 3> ps;
  for (std::size_t j = 0; j < 3; ++j) {
    Path p = theta->paths[j].front() == other ? theta->paths[j] : theta->paths[j].reversed();
    ps[j] = lift_to_g(g, k, p);
  }
  auto r = oddc3_or_tok4_from_three_paths(g, c, k.from_h[other], ps);
  if (auto* cert = std::get_if<OddC3Cert>(&r)) return breach(*cert);
  out.kind = Tok4Verdict::Kind::tok4;
  out.tok4 = std::get<Tok4Cert>(r);
  if (auto v = verify_tok4(g, *out.tok4); !v) throw std::logic_error("detect_tok4: " + v.reason);
  return out;
}

CriticalityPredicates criticality_predicates(const Graph& g, std::size_t max_edges) {
  if (g.edge_count() > max_edges) throw ScaleBoundExceeded("criticality_predicates: limited to " + std::to_string(max_edges) + " edges");
  CriticalityPredicates out;
  std::vector<std::vector<EdgeId>> odd;
  for (auto& cyc : all_circuits(g)) {
    if (cyc.size() % 2 == 1) odd.push_back(std::move(cyc));
  }
  out.critical_non_bipartite = !odd.empty();
  for (std::size_t i = 0; i < odd.size() && out.critical_non_bipartite; ++i) {
    for (std::size_t j = i + 1; j < odd.size() && out.critical_non_bipartite; ++j) {
      std::vector<EdgeId> both;
      std::set_intersection(odd[i].begin(), odd[i].end(), odd[j].begin(), odd[j].end(), std::back_inserter(both));
      if (both.empty()) out.critical_non_bipartite = false;
    }
  }
  for (EdgeId e = 0; e < g.edge_count() && out.critical_non_bipartite && !out.elementary; ++e) {
    std::vector<std::uint8_t> mask(g.edge_count(), 1);
    mask[e] = 0;
    out.elementary = is_bipartite(GraphView(g, mask)).bipartite;
  }
  out.basic = is_basic(g);
  for (EdgeId e = 0; e < g.edge_count() && !out.basic && !out.critical_non_basic; ++e) {
    out.critical_non_basic = is_basic(without_edge(g, e));
  }
  return out;
}

CircuitComponentReport check_circuit_components(const Graph& g, const Circuit& c, std::size_t max_edges) {
  if (g.edge_count() > max_edges) throw ScaleBoundExceeded("check_circuit_components: limited to " + std::to_string(max_edges) + " edges");
  if (is_bipartite(g).bipartite) throw PreconditionError("check_circuit_components: graph is bipartite");
  if (!is_valid_circuit(g, c) || !c.odd()) throw PreconditionError("check_circuit_components: c must be an odd circuit");
  if (oracle::brute_tok4(g, max_edges)) throw PreconditionError("check_circuit_components: graph contains a totally odd K4 subdivision");
  std::vector<char> on_c(g.edge_count(), 0);
  for (auto e : c.edges) on_c[e] = 1;
  std::vector<VertexId> parent(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) parent[v] = v;
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (on_c[e] == 0) parent[find(g.endpoints(e).first)] = find(g.endpoints(e).second);
  }
  std::vector<std::vector<EdgeId>> groups;
  std::vector<int> slot(g.vertex_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (on_c[e] != 0) continue;
    auto r = find(g.endpoints(e).first);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(e);
  }
  CircuitComponentReport out;
  for (auto& grp : groups) {
    CircuitComponent comp;
    comp.edges = grp;
    comp.edges.insert(comp.edges.end(), c.edges.begin(), c.edges.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    auto p = criticality_predicates(edge_induced(g, comp.edges).graph, max_edges);
    comp.critical_non_bipartite = p.critical_non_bipartite;
    comp.elementary = p.elementary;
    out.holds = out.holds && comp.ok();
    out.components.push_back(std::move(comp));
  }
  return out;
}

}  // namespace oddear
