#include "oddear/beta_phi.hpp"

#include <algorithm>
#include <bit>
#include <tuple>
#include <unordered_map>

#include "oddear/cycle_space.hpp"
#include "oddear/errors.hpp"

namespace oddear {

namespace {

// Exact maximum of odd ears, memoized on the covered edge set (at most 64 edges).
class EarSearch {
 public:
  explicit EarSearch(const Graph& g) : g_(g), full_(g.edge_count() == 64 ? ~0ULL : (1ULL << g.edge_count()) - 1) {}

  // Best decomposition over first ears accepted by `keep`.
  template <class Keep>
  std::optional<OddEarResult> run(Keep keep) {
    auto cs = all_circuits(g_);
    std::vector<Circuit> firsts;
    for (const auto& edges : cs) {
      if (keep(edges)) firsts.push_back(*circuit_from_edges(g_, edges));
    }
    std::stable_sort(firsts.begin(), firsts.end(), [](const Circuit& a, const Circuit& b) {
      return std::make_tuple(!a.odd(), a.length()) < std::make_tuple(!b.odd(), b.length());
    });
    std::optional<std::pair<std::size_t, std::size_t>> best;  // (value, index)
    const std::size_t cap = g_.edge_count() + 1 - g_.vertex_count();
    for (std::size_t i = 0; i < firsts.size(); ++i) {
      std::size_t v = (firsts[i].odd() ? 1 : 0) + value(mask_of(firsts[i].edges));
      if (!best || v > best->first) best = {v, i};
      if (best->first == cap) break;
    }
    if (!best) return std::nullopt;
    OddEarResult out;
    out.value = best->first;
    out.witness.host = &g_;
    out.witness.circuit = firsts[best->second];
    std::uint64_t mask = mask_of(out.witness.circuit.edges);
    while (mask != full_) {
      std::size_t want = value(mask);
      for (const auto& p : ears(mask)) {
        std::uint64_t next = mask | mask_of(p.edges);
        if ((p.odd() ? 1 : 0) + value(next) == want) {
          out.witness.paths.push_back(p);
          mask = next;
          break;
        }
      }
    }
    return out;
  }

 private:
  static std::uint64_t mask_of(const std::vector<EdgeId>& edges) {
    std::uint64_t m = 0;
    for (auto e : edges) m |= 1ULL << e;
    return m;
  }

  std::vector<std::uint8_t> covered_vertices(std::uint64_t mask) const {
    std::vector<std::uint8_t> on(g_.vertex_count(), 0);
    for (std::uint64_t r = mask; r != 0; r &= r - 1) {
      auto [a, b] = g_.endpoints(static_cast<EdgeId>(std::countr_zero(r)));
      on[a] = on[b] = 1;
    }
    return on;
  }

  // Open ears of the covered part: odd first, then shorter, then smaller end ids.
  std::vector<Path> ears(std::uint64_t mask) const {
    auto on = covered_vertices(mask);
    std::vector<Path> out;
    std::vector<std::uint8_t> visiting(g_.vertex_count(), 0);
    Path cur;
    auto dfs = [&](auto&& self, VertexId x) -> void {
      for (const auto& inc : g_.incident(x)) {
        if (((mask >> inc.edge) & 1ULL) != 0) continue;
        VertexId y = inc.neighbor;
        if (visiting[y] != 0) continue;
        cur.vertices.push_back(y);
        cur.edges.push_back(inc.edge);
        if (on[y] != 0) {
          if (cur.front() < y) out.push_back(cur);
        } else {
          visiting[y] = 1;
          self(self, y);
          visiting[y] = 0;
        }
        cur.vertices.pop_back();
        cur.edges.pop_back();
      }
    };
    for (VertexId a = 0; a < g_.vertex_count(); ++a) {
      if (on[a] == 0) continue;
      cur = Path{{a}, {}};
      visiting[a] = 1;
      dfs(dfs, a);
      visiting[a] = 0;
    }
    std::stable_sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
      return std::make_tuple(!a.odd(), a.length(), a.front(), a.back()) < std::make_tuple(!b.odd(), b.length(), b.front(), b.back());
    });
    return out;
  }

  std::size_t value(std::uint64_t mask) {
    if (mask == full_) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    auto on = covered_vertices(mask);
    const auto left_edges = static_cast<std::size_t>(std::popcount(full_ & ~mask));
    const auto left_vertices = static_cast<std::size_t>(std::count(on.begin(), on.end(), 0));
    const std::size_t cap = left_edges - left_vertices;
    std::size_t best = 0;
    bool any = false;
    for (const auto& p : ears(mask)) {
      any = true;
      best = std::max(best, (p.odd() ? 1 : 0) + value(mask | mask_of(p.edges)));
      if (best == cap) break;
    }
    if (!any) throw PreconditionError("ear search stalled: graph is not 2-connected");
    memo_[mask] = best;
    return best;
  }

  const Graph& g_;
  std::uint64_t full_;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
};

void require_searchable(const Graph& g, std::size_t max_edges) {
  if (g.edge_count() > std::min<std::size_t>(max_edges, 64)) {
    throw ScaleBoundExceeded("exact ear search is limited to " + std::to_string(std::min<std::size_t>(max_edges, 64)) + " edges");
  }
  const bool bond = g.vertex_count() == 2 && g.edge_count() >= 2;
  if (!bond && !is_two_connected(g)) throw PreconditionError("ear search needs a 2-connected graph");
}

}  // namespace

OddEarResult max_odd_ears(const Graph& g, std::size_t max_edges) {
  require_searchable(g, max_edges);
  return *EarSearch(g).run([](const std::vector<EdgeId>&) { return true; });
}

std::size_t phi(const Graph& g, std::size_t max_edges) {
  auto r = max_odd_ears(g, max_edges);
  return g.edge_count() - g.vertex_count() + 1 - r.value;
}

EarDecomposition optimal_through_edge(const Graph& g, EdgeId e, std::size_t max_edges) {
  require_searchable(g, max_edges);
  if (e >= g.edge_count()) throw PreconditionError("optimal_through_edge: edge out of range");
  auto r = EarSearch(g).run([e](const std::vector<EdgeId>& c) { return std::binary_search(c.begin(), c.end(), e); });
  return r->witness;
}

EarDecomposition optimal_first_ear_odd(const Graph& g, const EarDecomposition& d, std::size_t max_edges) {
  if (d.host != &g) throw PreconditionError("optimal_first_ear_odd: decomposition belongs to another graph");
  if (auto v = validate(d); !v) throw PreconditionError("optimal_first_ear_odd: " + v.reason);
  if (is_bipartite(g).bipartite) throw PreconditionError("optimal_first_ear_odd: graph is bipartite");
  if (odd_ear_count(d) != max_odd_ears(g, max_edges).value) throw PreconditionError("optimal_first_ear_odd: decomposition is not optimal");
  if (d.ear_odd(0)) return d;
  std::vector<EdgeId> prefix;
  std::size_t i = 0;
  for (;; ++i) {
    prefix.insert(prefix.end(), d.ear_edges(i).begin(), d.ear_edges(i).end());
    std::sort(prefix.begin(), prefix.end());
    if (!is_bipartite(edge_induced(g, prefix).graph).bipartite) break;
  }
  // Every circuit of the prefix through an edge of ear i is odd.
  Subgraph h = edge_induced(g, prefix);
  EdgeId e = d.ear_edges(i).front();
  auto local = static_cast<EdgeId>(std::find(h.edge_in_parent.begin(), h.edge_in_parent.end(), e) - h.edge_in_parent.begin());
  auto dh = optimal_through_edge(h.graph, local, max_edges);
  EarDecomposition out;
  out.host = &g;
  out.circuit = h.lift(dh.circuit);
  for (const auto& p : dh.paths) out.paths.push_back(h.lift(p));
  out.paths.insert(out.paths.end(), d.paths.begin() + static_cast<std::ptrdiff_t>(i), d.paths.end());
  return out;
}

BetaResult beta_brute(const Graph& g, std::size_t max_edges) {
  if (g.edge_count() > std::min<std::size_t>(max_edges, 30)) {
    throw ScaleBoundExceeded("beta_brute is limited to " + std::to_string(std::min<std::size_t>(max_edges, 30)) + " edges");
  }
  const std::size_t m = g.edge_count();
  BetaResult out;
  std::vector<std::uint32_t> seen(g.vertex_count(), 0);
  std::uint32_t stamp = 0;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    ++stamp;
    std::size_t vs = 0;
    for (std::uint32_t r = mask; r != 0; r &= r - 1) {
      auto [a, b] = g.endpoints(static_cast<EdgeId>(std::countr_zero(r)));
      for (VertexId x : {a, b}) {
        if (seen[x] != stamp) {
          seen[x] = stamp;
          ++vs;
        }
      }
    }
    const auto es = static_cast<std::size_t>(std::popcount(mask));
    if (es + 1 <= vs || es + 1 - vs <= out.value) continue;
    std::vector<EdgeId> edges;
    for (std::uint32_t r = mask; r != 0; r &= r - 1) edges.push_back(static_cast<EdgeId>(std::countr_zero(r)));
    Subgraph h = edge_induced(g, edges);
    if (!is_two_connected(h.graph) || !is_factor_critical(h.graph)) continue;
    out.value = es + 1 - vs;
    out.subgraph = std::move(edges);
  }
  if (out.value == 0) return out;
  Subgraph h = edge_induced(g, out.subgraph);
  auto best = max_odd_ears(h.graph, 64);
  if (best.value != out.value) throw std::logic_error("beta_brute: factor-critical block without an odd ear-decomposition");
  EarDecomposition w;
  w.host = &g;
  w.circuit = h.lift(best.witness.circuit);
  for (const auto& p : best.witness.paths) w.paths.push_back(h.lift(p));
  out.witness = std::move(w);
  return out;
}

BetaLeOne beta_le_1(const Graph& g) {
  BetaLeOne out;
  out.decision = decide_oddc3_free(g);
  out.holds = out.decision.is_free();
  return out;
}

EarDecomposition hk_witness(const Graph& hk, int k) {
  if (k < 2) throw PreconditionError("hk_witness needs k >= 2");
  auto path = [&](std::initializer_list<const char*> vs, std::initializer_list<std::string> es) {
    Path p;
    for (const char* v : vs) p.vertices.push_back(hk.vertex(v));
    for (const auto& e : es) p.edges.push_back(hk.edge(e));
    return p;
  };
  EarDecomposition d;
  d.host = &hk;
  d.circuit = Circuit{{hk.vertex("u"), hk.vertex("v"), hk.vertex("c1")}, {hk.edge("uv"), hk.edge("v-c1"), hk.edge("u-c1")}};
  for (int i = 1; i <= k; ++i) {
    auto s = std::to_string(i);
    std::string c = "c" + s;
    std::string dd = "d" + s;
    std::string e = "e" + s;
    if (i >= 2) d.paths.push_back(path({"v", c.c_str(), "u"}, {"v-" + c, "u-" + c}));
    d.paths.push_back(path({c.c_str(), dd.c_str(), e.c_str(), "u"}, {c + "-" + dd, dd + "-" + e, e + "-u"}));
  }
  if (auto v = validate(d); !v) throw PreconditionError("hk_witness: host is not H_" + std::to_string(k) + ": " + v.reason);
  return d;
}

}  // namespace oddear
