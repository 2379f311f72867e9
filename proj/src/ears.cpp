#include "oddear/ears.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "oddear/errors.hpp"

namespace oddear {

std::vector<EdgeId> EarDecomposition::covered_edges() const {
  std::vector<EdgeId> out = circuit.edges;
  for (const auto& p : paths) out.insert(out.end(), p.edges.begin(), p.edges.end());
  std::sort(out.begin(), out.end());
  return out;
}

EarDecomposition EarDecomposition::prefix(std::size_t count) const {
  EarDecomposition d{host, circuit, {}};
  if (count > 1) d.paths.assign(paths.begin(), paths.begin() + static_cast<std::ptrdiff_t>(std::min(count - 1, paths.size())));
  return d;
}

namespace {

// 2-connected, or two vertices joined by parallel edges.
bool decomposable(const Graph& g) {
  if (is_two_connected(g)) return true;
  return g.vertex_count() == 2 && g.edge_count() >= 2;
}

Validation fail(std::string why) { return Validation{false, std::move(why)}; }

Validation check_ears(const EarDecomposition& d, std::vector<std::uint8_t>& vcov, std::vector<std::uint8_t>& ecov) {
  if (d.host == nullptr) return fail("no host graph");
  const Graph& g = *d.host;
  vcov.assign(g.vertex_count(), 0);
  ecov.assign(g.edge_count(), 0);
  if (!is_valid_circuit(g, d.circuit)) return fail("ear 0 is not a circuit");
  for (VertexId v : d.circuit.vertices) vcov[v] = 1;
  for (EdgeId e : d.circuit.edges) ecov[e] = 1;
  for (std::size_t i = 0; i < d.paths.size(); ++i) {
    const Path& p = d.paths[i];
    const std::string tag = "ear " + std::to_string(i + 1);
    for (EdgeId e : p.edges) {
      if (e < g.edge_count() && ecov[e] != 0) return fail("edge covered twice");
    }
    if (!is_valid_path(g, p)) return fail(tag + " is not a path");
    if (vcov[p.front()] == 0 || vcov[p.back()] == 0) return fail(tag + " has an end outside the earlier ears");
    for (std::size_t j = 1; j + 1 < p.vertices.size(); ++j) {
      if (vcov[p.vertices[j]] != 0) return fail(tag + " has a stale internal vertex");
    }
    for (VertexId v : p.vertices) vcov[v] = 1;
    for (EdgeId e : p.edges) ecov[e] = 1;
  }
  return {};
}

}  // namespace

Validation validate_partial(const EarDecomposition& d) {
  std::vector<std::uint8_t> vcov;
  std::vector<std::uint8_t> ecov;
  return check_ears(d, vcov, ecov);
}

Validation validate(const EarDecomposition& d) {
  std::vector<std::uint8_t> vcov;
  std::vector<std::uint8_t> ecov;
  auto r = check_ears(d, vcov, ecov);
  if (!r) return r;
  const Graph& g = *d.host;
  if (std::count(ecov.begin(), ecov.end(), 0) != 0) return fail("edge not covered");
  if (std::count(vcov.begin(), vcov.end(), 0) != 0) return fail("vertex not covered");
  if (d.size() != g.edge_count() - g.vertex_count() + 1) return fail("ear count differs from cyclomatic number");
  return {};
}

std::size_t odd_ear_count(const EarDecomposition& d) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < d.size(); ++i) n += d.ear_odd(i) ? 1 : 0;
  return n;
}

EarDecomposition from_circuit(const Graph& g, Circuit c) { return EarDecomposition{&g, std::move(c), {}}; }

EarDecomposition ear_decomposition(const Graph& g) {
  if (!decomposable(g)) throw PreconditionError("ear decomposition needs a 2-connected graph");
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> pre(n, kUnset);
  std::vector<EdgeId> parent_edge(n, kUnset);
  std::vector<std::uint8_t> tree(g.edge_count(), 0);
  std::vector<VertexId> order;
  std::vector<std::pair<VertexId, std::size_t>> stack{{0, 0}};
  pre[0] = 0;
  order.push_back(0);
  while (!stack.empty()) {
    auto& [x, idx] = stack.back();
    const auto& inc = g.incident(x);
    if (idx == inc.size()) {
      stack.pop_back();
      continue;
    }
    auto [e, y] = inc[idx++];
    if (pre[y] != kUnset) continue;
    pre[y] = static_cast<std::uint32_t>(order.size());
    order.push_back(y);
    parent_edge[y] = e;
    tree[e] = 1;
    stack.emplace_back(y, 0);
  }

  EarDecomposition d{&g, {}, {}};
  std::vector<std::uint8_t> visited(n, 0);
  bool first = true;
  for (VertexId v : order) {
    for (const auto& [e, w] : g.incident(v)) {
      if (tree[e] != 0 || pre[w] < pre[v]) continue;
      visited[v] = 1;
      Path chain{{v}, {e}};
      VertexId x = w;
      while (visited[x] == 0) {
        visited[x] = 1;
        chain.vertices.push_back(x);
        chain.edges.push_back(parent_edge[x]);
        x = g.opposite(parent_edge[x], x);
      }
      chain.vertices.push_back(x);
      if (first) {
        chain.vertices.pop_back();
        d.circuit = Circuit{std::move(chain.vertices), std::move(chain.edges)};
        first = false;
      } else {
        d.paths.push_back(std::move(chain));
      }
    }
  }
  return d;
}

EarDecomposition complete_from(const Graph& g, const EarDecomposition& partial) {
  EarDecomposition d = partial;
  d.host = &g;
  std::vector<std::uint8_t> vcov;
  std::vector<std::uint8_t> ecov;
  if (auto r = check_ears(d, vcov, ecov); !r) throw PreconditionError("invalid partial decomposition: " + r.reason);
  if (!decomposable(g)) throw PreconditionError("completion needs a 2-connected graph");
  std::vector<EdgeId> via(g.vertex_count(), 0);
  std::vector<std::uint32_t> seen(g.vertex_count(), 0);
  std::uint32_t stamp = 0;
  EdgeId scan = 0;
  for (;;) {
    // Smallest uncovered edge touching the covered part.
    std::optional<EdgeId> pick;
    bool any_uncovered = false;
    for (EdgeId e = scan; e < g.edge_count(); ++e) {
      if (ecov[e] != 0) continue;
      if (!any_uncovered) {
        scan = e;
        any_uncovered = true;
      }
      auto [a, b] = g.endpoints(e);
      if (vcov[a] != 0 || vcov[b] != 0) {
        pick = e;
        break;
      }
    }
    if (!any_uncovered) break;
    if (!pick) throw PreconditionError("completion stalled: graph is not 2-connected");
    auto [a, b] = g.endpoints(*pick);
    if (vcov[a] == 0) std::swap(a, b);
    Path ear{{a, b}, {*pick}};
    if (vcov[b] == 0) {
      ++stamp;
      std::deque<VertexId> q{b};
      seen[b] = stamp;
      std::optional<VertexId> hit;
      while (!q.empty() && !hit) {
        VertexId x = q.front();
        q.pop_front();
        for (const auto& inc : g.incident(x)) {
          VertexId y = inc.neighbor;
          if (y == a || seen[y] == stamp) continue;
          seen[y] = stamp;
          via[y] = inc.edge;
          if (vcov[y] != 0) {
            hit = y;
            break;
          }
          q.push_back(y);
        }
      }
      if (!hit) throw PreconditionError("completion stalled: graph is not 2-connected");
      std::vector<VertexId> tail_v;
      std::vector<EdgeId> tail_e;
      for (VertexId x = *hit; x != b; x = g.opposite(via[x], x)) {
        tail_v.push_back(x);
        tail_e.push_back(via[x]);
      }
      ear.vertices.insert(ear.vertices.end(), tail_v.rbegin(), tail_v.rend());
      ear.edges.insert(ear.edges.end(), tail_e.rbegin(), tail_e.rend());
    }
    for (VertexId v : ear.vertices) vcov[v] = 1;
    for (EdgeId e : ear.edges) ecov[e] = 1;
    d.paths.push_back(std::move(ear));
  }
  return d;
}

namespace {

// Edmonds' blossom algorithm on a dense index space.
class Blossom {
 public:
  explicit Blossom(std::vector<std::vector<int>> adj)
      : n_(static_cast<int>(adj.size())), adj_(std::move(adj)), match_(n_, -1), p_(n_), base_(n_), used_(n_),
        blossom_(n_) {}

  const std::vector<int>& run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int u : adj_[v]) {
        if (match_[u] == -1) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int end = find_path(v);
      while (end != -1) {
        int pv = p_[end];
        int ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = p_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b] != 0) return b;
      b = p_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(p_.begin(), p_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::deque<int> q{root};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]] == 0) continue;
            base_[i] = cur;
            if (used_[i] == 0) {
              used_[i] = 1;
              q.push_back(i);
            }
          }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> p_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

}  // namespace

MatchingResult maximum_matching(const GraphView& view) {
  const Graph& g = view.graph();
  std::vector<int> index(g.vertex_count(), -1);
  std::vector<VertexId> back;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!view.has_vertex(v)) continue;
    index[v] = static_cast<int>(back.size());
    back.push_back(v);
  }
  std::vector<std::vector<int>> adj(back.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!view.has_edge(e)) continue;
    auto [a, b] = g.endpoints(e);
    adj[index[a]].push_back(index[b]);
    adj[index[b]].push_back(index[a]);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  Blossom solver(std::move(adj));
  const auto& match = solver.run();
  MatchingResult r;
  std::size_t matched = 0;
  for (std::size_t i = 0; i < back.size(); ++i) {
    if (match[i] == -1) continue;
    ++matched;
    if (static_cast<int>(i) > match[i]) continue;
    VertexId a = back[i];
    VertexId b = back[match[i]];
    for (const auto& inc : g.incident(a)) {
      if (inc.neighbor == b && view.has_edge(inc.edge)) {
        r.matching.push_back(inc.edge);
        break;
      }
    }
  }
  std::sort(r.matching.begin(), r.matching.end());
  r.perfect = matched == back.size();
  return r;
}

MatchingResult has_perfect_matching(const GraphView& view) { return maximum_matching(view); }

bool is_factor_critical(const GraphView& view) {
  const Graph& g = view.graph();
  std::vector<std::uint8_t> vmask(g.vertex_count(), 0);
  std::vector<std::uint8_t> emask(g.edge_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) vmask[v] = view.has_vertex(v) ? 1 : 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) emask[e] = view.has_edge(e) ? 1 : 0;
  const auto present = static_cast<std::size_t>(std::count(vmask.begin(), vmask.end(), 1));
  if (present % 2 == 0) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (vmask[v] == 0) continue;
    vmask[v] = 0;
    bool ok = maximum_matching(GraphView(g, emask, vmask)).perfect;
    vmask[v] = 1;
    if (!ok) return false;
  }
  return true;
}

}  // namespace oddear
