#include "oddear/oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "oddear/errors.hpp"

namespace oddear::oracle {

namespace {

std::size_t matching_rec(const std::vector<std::uint32_t>& adj, std::uint32_t alive) {
  if (alive == 0) return 0;
  int v = std::countr_zero(alive);
  std::uint32_t rest = alive & ~(1U << v);
  std::size_t best = matching_rec(adj, rest);
  for (std::uint32_t cand = adj[v] & rest; cand != 0; cand &= cand - 1) {
    int u = std::countr_zero(cand);
    best = std::max(best, 1 + matching_rec(adj, rest & ~(1U << u)));
  }
  return best;
}

std::vector<std::uint32_t> dense_adjacency(const GraphView& view, std::uint32_t& alive) {
  const Graph& g = view.graph();
  std::vector<int> index(g.vertex_count(), -1);
  int k = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (view.has_vertex(v)) index[v] = k++;
  }
  if (k > 20) throw ScaleBoundExceeded("matching oracle handles at most 20 vertices");
  std::vector<std::uint32_t> adj(k, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!view.has_edge(e)) continue;
    auto [a, b] = g.endpoints(e);
    adj[index[a]] |= 1U << index[b];
    adj[index[b]] |= 1U << index[a];
  }
  alive = k == 32 ? ~0U : (1U << k) - 1;
  return adj;
}

}  // namespace

std::size_t max_matching_size(const GraphView& view) {
  std::uint32_t alive = 0;
  auto adj = dense_adjacency(view, alive);
  return matching_rec(adj, alive);
}

bool has_perfect_matching(const GraphView& view) {
  std::uint32_t alive = 0;
  auto adj = dense_adjacency(view, alive);
  return 2 * matching_rec(adj, alive) == static_cast<std::size_t>(std::popcount(alive));
}

bool is_factor_critical(const GraphView& view) {
  std::uint32_t alive = 0;
  auto adj = dense_adjacency(view, alive);
  const int n = std::popcount(alive);
  if (n % 2 == 0) return false;
  for (int v = 0; v < n; ++v) {
    if (2 * matching_rec(adj, alive & ~(1U << v)) != static_cast<std::size_t>(n - 1)) return false;
  }
  return true;
}

std::vector<EdgeSet> enum_circuits(const Graph& g, std::size_t max_edges) {
  if (g.edge_count() > max_edges || g.edge_count() > 63) {
    throw ScaleBoundExceeded("circuit oracle: too many edges");
  }
  const std::size_t n = g.vertex_count();
  // Spanning forest by union-find; each other edge closes one fundamental cycle.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> forest(n);
  std::vector<EdgeId> chords;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    auto ra = find(a);
    auto rb = find(b);
    if (ra == rb) {
      chords.push_back(e);
    } else {
      parent[ra] = rb;
      forest[a].emplace_back(b, e);
      forest[b].emplace_back(a, e);
    }
  }
  auto tree_path = [&](VertexId from, VertexId to) {
    std::vector<std::pair<VertexId, EdgeId>> prev(n, {n, 0});
    std::vector<VertexId> stack{from};
    prev[from] = {from, 0};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (auto [y, e] : forest[x]) {
        if (prev[y].first != n) continue;
        prev[y] = {x, e};
        stack.push_back(y);
      }
    }
    std::uint64_t mask = 0;
    for (VertexId x = to; x != from; x = prev[x].first) mask |= 1ULL << prev[x].second;
    return mask;
  };
  std::vector<std::uint64_t> basis;
  for (EdgeId c : chords) {
    auto [a, b] = g.endpoints(c);
    basis.push_back(tree_path(a, b) | (1ULL << c));
  }
  if (basis.size() > 24) throw ScaleBoundExceeded("circuit oracle: cycle space too large");

  std::vector<EdgeSet> out;
  std::vector<int> deg(n);
  std::uint64_t cur = 0;
  const std::uint64_t total = 1ULL << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= basis[std::countr_zero(i)];
    std::fill(deg.begin(), deg.end(), 0);
    bool ok = true;
    for (std::uint64_t m = cur; m != 0; m &= m - 1) {
      auto [a, b] = g.endpoints(static_cast<EdgeId>(std::countr_zero(m)));
      ++deg[a];
      ++deg[b];
    }
    for (int d : deg) ok = ok && (d == 0 || d == 2);
    if (!ok) continue;
    // Connected support: walk from one edge.
    std::uint64_t reached = 0;
    std::vector<VertexId> stack{g.endpoints(static_cast<EdgeId>(std::countr_zero(cur))).first};
    std::vector<std::uint8_t> vseen(n, 0);
    vseen[stack[0]] = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(x)) {
        if (((cur >> inc.edge) & 1ULL) == 0) continue;
        reached |= 1ULL << inc.edge;
        if (vseen[inc.neighbor] == 0) {
          vseen[inc.neighbor] = 1;
          stack.push_back(inc.neighbor);
        }
      }
    }
    if (reached != cur) continue;
    EdgeSet s;
    for (std::uint64_t m = cur; m != 0; m &= m - 1) s.push_back(static_cast<EdgeId>(std::countr_zero(m)));
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::uint64_t mask_of(const EdgeSet& s) {
  std::uint64_t m = 0;
  for (EdgeId e : s) m |= 1ULL << e;
  return m;
}

// Circuit vertex order recovered from its edge set.
std::vector<VertexId> walk_order(const Graph& g, const EdgeSet& c) {
  std::vector<EdgeId> left(c.begin(), c.end());
  auto [start, next] = g.endpoints(left.front());
  std::vector<VertexId> order{start, next};
  left.erase(left.begin());
  while (!left.empty()) {
    VertexId cur = order.back();
    for (std::size_t i = 0; i < left.size(); ++i) {
      auto [a, b] = g.endpoints(left[i]);
      if (a != cur && b != cur) continue;
      order.push_back(a == cur ? b : a);
      left.erase(left.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  order.pop_back();
  return order;
}

}  // namespace

std::optional<OddPair> brute_even_odd_pair(const Graph& g, std::size_t max_edges) {
  auto circuits = enum_circuits(g, max_edges);
  std::vector<std::size_t> parent(g.edge_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : circuits) {
    for (EdgeId e : c) parent[find(e)] = find(c.front());
  }
  std::vector<std::pair<const EdgeSet*, std::uint64_t>> odd;
  for (const auto& c : circuits) {
    if (c.size() % 2 == 1) odd.emplace_back(&c, mask_of(c));
  }
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      if (find(odd[i].first->front()) != find(odd[j].first->front())) continue;
      if (std::popcount(odd[i].second & odd[j].second) % 2 == 0) return OddPair{*odd[i].first, *odd[j].first};
    }
  }
  return std::nullopt;
}

bool has_oddc3_subgraph(const Graph& g, std::size_t max_edges) {
  auto circuits = enum_circuits(g, max_edges);
  const std::size_t n = g.vertex_count();
  for (const auto& c : circuits) {
    if (c.size() % 2 == 0) continue;
    std::uint64_t cm = mask_of(c);
    auto order = walk_order(g, c);
    std::vector<std::uint8_t> on_c(n, 0);
    for (VertexId v : order) on_c[v] = 1;
    // Odd path from x to another vertex of C, avoiding C's edges and inner vertices on C.
    std::vector<std::uint8_t> used(n, 0);
    bool found = false;
    auto dfs = [&](auto&& self, VertexId x, VertexId from, std::size_t len) -> void {
      if (found) return;
      for (const auto& inc : g.incident(x)) {
        if (((cm >> inc.edge) & 1ULL) != 0) continue;
        VertexId y = inc.neighbor;
        if (on_c[y] != 0) {
          if (y != from && (len + 1) % 2 == 1) found = true;
          continue;
        }
        if (used[y] != 0) continue;
        used[y] = 1;
        self(self, y, from, len + 1);
        used[y] = 0;
      }
    };
    for (VertexId x : order) {
      dfs(dfs, x, x, 0);
      if (found) return true;
    }
  }
  return false;
}

bool has_line_graph_root(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 10) throw ScaleBoundExceeded("root oracle handles at most 10 vertices");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    adj[a][b] = adj[b][a] = 1;
  }
  // Vertex x becomes root edge {lo[x], hi[x]}; labels appear in increasing order.
  std::vector<int> lo(n);
  std::vector<int> hi(n);
  auto rec = [&](auto&& self, std::size_t x, int labels) -> bool {
    if (x == n) return true;
    for (int a = 0; a <= labels; ++a) {
      for (int b = a + 1; b <= std::max(labels, a + 1) && b <= labels + 1; ++b) {
        if (a == labels && b != labels + 1) continue;
        lo[x] = a;
        hi[x] = b;
        bool ok = true;
        for (std::size_t y = 0; y < x && ok; ++y) {
          if (lo[y] == a && hi[y] == b) ok = false;
          bool share = lo[y] == a || lo[y] == b || hi[y] == a || hi[y] == b;
          if (share != (adj[x][y] != 0)) ok = false;
        }
        if (!ok) continue;
        int used = std::max(labels, b + 1);
        if (self(self, x + 1, used)) return true;
      }
    }
    return false;
  };
  return rec(rec, 0, 0);
}

namespace {

std::size_t mask_rank(std::vector<std::uint64_t> rows) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == 0) continue;
    ++r;
    std::uint64_t low = rows[i] & (~rows[i] + 1);
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if ((rows[j] & low) != 0) rows[j] ^= rows[i];
    }
  }
  return r;
}

}  // namespace

std::vector<ElementSet> enum_matroid_circuits(const BinaryMatroid& m, std::size_t max_dim) {
  const std::size_t n = m.size();
  if (n > 64) throw ScaleBoundExceeded("enum_matroid_circuits: more than 64 elements");
  std::vector<std::uint64_t> rows;
  for (const auto& r : m.rows()) {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < n; ++j) w |= static_cast<std::uint64_t>(r.get(j)) << j;
    rows.push_back(w);
  }
  // Reduced row echelon form, then one kernel vector per free column.
  std::vector<std::uint64_t> red = rows;
  std::vector<std::size_t> pivot_col;
  std::size_t cur = 0;
  for (std::size_t j = 0; j < n && cur < red.size(); ++j) {
    std::size_t at = cur;
    while (at < red.size() && ((red[at] >> j) & 1ULL) == 0) ++at;
    if (at == red.size()) continue;
    std::swap(red[cur], red[at]);
    for (std::size_t i = 0; i < red.size(); ++i) {
      if (i != cur && ((red[i] >> j) & 1ULL) != 0) red[i] ^= red[cur];
    }
    pivot_col.push_back(j);
    ++cur;
  }
  std::vector<std::uint64_t> kernel;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::find(pivot_col.begin(), pivot_col.end(), j) != pivot_col.end()) continue;
    std::uint64_t v = 1ULL << j;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      if (((red[i] >> j) & 1ULL) != 0) v |= 1ULL << pivot_col[i];
    }
    kernel.push_back(v);
  }
  if (kernel.size() > max_dim) throw ScaleBoundExceeded("enum_matroid_circuits: kernel too large");
  auto rank_on = [&](std::uint64_t x) {
    std::vector<std::uint64_t> masked;
    for (auto r : rows) masked.push_back(r & x);
    return mask_rank(std::move(masked));
  };
  std::vector<ElementSet> out;
  std::uint64_t cur_vec = 0;
  for (std::uint64_t i = 1; i < (1ULL << kernel.size()); ++i) {
    cur_vec ^= kernel[std::countr_zero(i)];
    const auto size = static_cast<std::size_t>(std::popcount(cur_vec));
    bool minimal = true;
    for (std::uint64_t rest = cur_vec; rest != 0 && minimal; rest &= rest - 1) {
      std::uint64_t x = rest & (~rest + 1);
      if (rank_on(cur_vec & ~x) != size - 1) minimal = false;
    }
    if (!minimal) continue;
    ElementSet c;
    for (std::size_t j = 0; j < n; ++j) {
      if (((cur_vec >> j) & 1ULL) != 0) c.push_back(static_cast<std::uint32_t>(j));
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::optional<Tok4Cert> brute_tok4(const Graph& g, std::size_t max_edges) {
  const std::size_t m = g.edge_count();
  if (m > std::min<std::size_t>(max_edges, 30)) throw ScaleBoundExceeded("brute_tok4: too many edges");
  std::vector<int> deg(g.vertex_count());
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    if (std::popcount(mask) < 6) continue;
    std::fill(deg.begin(), deg.end(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      if ((mask >> e) & 1U) {
        ++deg[g.endpoints(e).first];
        ++deg[g.endpoints(e).second];
      }
    }
    std::vector<VertexId> br;
    bool ok = true;
    for (VertexId v = 0; v < g.vertex_count() && ok; ++v) {
      if (deg[v] == 3) br.push_back(v);
      else if (deg[v] != 0 && deg[v] != 2) ok = false;
    }
    if (!ok || br.size() != 4) continue;
    Tok4Cert cert;
    std::copy(br.begin(), br.end(), cert.branch.begin());
    std::array<int, 6> found{};
    std::size_t walked = 0;
    for (int i = 0; i < 4 && ok; ++i) {
      for (const auto& inc : g.incident(br[i])) {
        if (((mask >> inc.edge) & 1U) == 0) continue;
        Path p{{br[i]}, {}};
        EdgeId e = inc.edge;
        VertexId x = br[i];
        for (;;) {
          x = g.opposite(e, x);
          p.vertices.push_back(x);
          p.edges.push_back(e);
          if (deg[x] == 3) break;
          for (const auto& nx : g.incident(x)) {
            if (((mask >> nx.edge) & 1U) != 0 && nx.edge != e) {
              e = nx.edge;
              break;
            }
          }
        }
        int j = static_cast<int>(std::find(br.begin(), br.end(), x) - br.begin());
        if (j == i || p.length() % 2 == 0) {
          ok = false;
          break;
        }
        if (j < i) continue;
        int slot = (i == 0) ? j - 1 : (i == 1 ? j + 1 : 5);
        if (++found[slot] > 1) {
          ok = false;
          break;
        }
        cert.paths[slot] = std::move(p);
        walked += cert.paths[slot].length();
      }
    }
    if (!ok || walked != static_cast<std::size_t>(std::popcount(mask))) continue;
    if (std::all_of(found.begin(), found.end(), [](int f) { return f == 1; })) return cert;
  }
  return std::nullopt;
}

}  // namespace oddear::oracle
