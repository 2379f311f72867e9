#include "oddear/paths.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <unordered_map>

#include "oddear/errors.hpp"

namespace oddear {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Residual network; vertices are split into in/out nodes of capacity 1 or 2.
class SplitFlow {
 public:
  struct Arc {
    std::uint32_t to;
    std::int32_t cap;
    std::uint32_t rev;
    EdgeId edge;        // graph edge for out->in arcs, kNone otherwise
    std::int32_t orig;  // 0 for residual back arcs
    std::int32_t taken = 0;
  };

  explicit SplitFlow(std::size_t nodes) : adj_(nodes) {}

  void add(std::uint32_t a, std::uint32_t b, std::int32_t cap, EdgeId edge = kNone) {
    adj_[a].push_back({b, cap, static_cast<std::uint32_t>(adj_[b].size()), edge, cap});
    adj_[b].push_back({a, 0, static_cast<std::uint32_t>(adj_[a].size() - 1), kNone, 0});
  }

  bool augment(std::uint32_t s, std::uint32_t t) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> prev(adj_.size(), {kNone, kNone});
    std::deque<std::uint32_t> q{s};
    prev[s] = {s, kNone};
    while (!q.empty() && prev[t].first == kNone) {
      auto x = q.front();
      q.pop_front();
      for (std::uint32_t i = 0; i < adj_[x].size(); ++i) {
        const Arc& a = adj_[x][i];
        if (a.cap > 0 && prev[a.to].first == kNone) {
          prev[a.to] = {x, i};
          q.push_back(a.to);
        }
      }
    }
    if (prev[t].first == kNone) return false;
    for (auto x = t; x != s;) {
      auto [p, i] = prev[x];
      Arc& a = adj_[p][i];
      a.cap -= 1;
      adj_[x][a.rev].cap += 1;
      x = p;
    }
    return true;
  }

  // Follow one unit of flow from s to t; returns the graph edges and nodes crossed.
  bool take_unit(std::uint32_t s, std::uint32_t t, std::vector<std::uint32_t>& nodes, std::vector<EdgeId>& edges) {
    nodes.assign(1, s);
    edges.clear();
    edge_after_.clear();
    auto x = s;
    std::size_t guard = 0;
    while (x != t) {
      if (++guard > 4 * adj_.size() + 8) return false;
      bool moved = false;
      for (auto& a : adj_[x]) {
        if (a.orig > 0 && a.orig - a.cap - a.taken > 0) {
          a.taken += 1;
          x = a.to;
          // Drop any flow circulation we walked around.
          auto seen = std::find(nodes.begin(), nodes.end(), x);
          if (seen != nodes.end()) {
            std::size_t keep_edges = 0;
            for (auto it = nodes.begin(); it != seen; ++it) {
              if (edge_after_.count(static_cast<std::size_t>(it - nodes.begin())) != 0) ++keep_edges;
            }
            nodes.erase(seen + 1, nodes.end());
            edges.resize(keep_edges);
            for (auto it = edge_after_.begin(); it != edge_after_.end();) {
              it = *it >= nodes.size() - 1 ? edge_after_.erase(it) : std::next(it);
            }
          } else {
            if (a.edge != kNone) {
              edge_after_.insert(nodes.size() - 1);
              edges.push_back(a.edge);
            }
            nodes.push_back(x);
          }
          moved = true;
          break;
        }
      }
      if (!moved) return false;
    }
    return true;
  }

 private:
  std::vector<std::vector<Arc>> adj_;
  std::set<std::size_t> edge_after_;  // node indices followed by a graph edge
};

struct LocalColoring {
  bool bipartite = true;
  std::unordered_map<VertexId, int> color;
};

}  // namespace

std::optional<Path> shortest_path(const GraphView& view, VertexId u, VertexId v) {
  std::vector<VertexId> from{u};
  std::vector<VertexId> to{v};
  return connecting_path(view, from, to);
}

std::optional<Path> connecting_path(const GraphView& view, std::span<const VertexId> from, std::span<const VertexId> to,
                                    std::span<const VertexId> forbidden) {
  const Graph& g = view.graph();
  const std::size_t n = g.vertex_count();
  // 1 = start, 2 = target, 4 = forbidden
  std::vector<std::uint8_t> role(n, 0);
  for (VertexId x : forbidden) role[x] |= 4;
  for (VertexId x : from) role[x] |= 1;
  for (VertexId x : to) role[x] |= 2;
  std::vector<std::uint8_t> is_root(n, 0);
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<EdgeId> via(n, 0);
  std::deque<VertexId> queue;
  std::vector<VertexId> starts(from.begin(), from.end());
  std::sort(starts.begin(), starts.end());
  for (VertexId x : starts) {
    if (!view.has_vertex(x) || (role[x] & 4) != 0 || seen[x] != 0) continue;
    if ((role[x] & 2) != 0) return Path{{x}, {}};
    seen[x] = 1;
    is_root[x] = 1;
    queue.push_back(x);
  }
  auto trace = [&](VertexId end) {
    Path p;
    p.vertices.push_back(end);
    VertexId cur = end;
    while (is_root[cur] == 0) {
      EdgeId e = via[cur];
      p.edges.push_back(e);
      cur = g.opposite(e, cur);
      p.vertices.push_back(cur);
    }
    return p.reversed();
  };
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      if (!view.has_edge(inc.edge)) continue;
      VertexId y = inc.neighbor;
      if ((role[y] & 4) != 0 || seen[y] != 0) continue;
      if ((role[y] & 2) != 0) {
        via[y] = inc.edge;
        return trace(y);
      }
      if ((role[y] & 1) != 0) continue;
      seen[y] = 1;
      via[y] = inc.edge;
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

std::optional<PathPair> two_disjoint_paths(const GraphView& view, std::span<const VertexId> s_set,
                                           std::span<const VertexId> t_set) {
  if (s_set.empty() || t_set.empty()) return std::nullopt;
  const Graph& g = view.graph();
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  std::vector<std::uint8_t> in_s(n, 0);
  std::vector<std::uint8_t> in_t(n, 0);
  for (VertexId x : s_set) in_s[x] = 1;
  for (VertexId x : t_set) in_t[x] = 1;
  const bool single_s = s_set.size() == 1;
  const bool single_t = t_set.size() == 1;
  const std::uint32_t source = 2 * n;
  const std::uint32_t sink = 2 * n + 1;
  SplitFlow flow(2 * n + 2);
  for (VertexId x = 0; x < n; ++x) {
    if (!view.has_vertex(x)) continue;
    int cap = ((single_s && in_s[x] != 0) || (single_t && in_t[x] != 0)) ? 2 : 1;
    flow.add(2 * x, 2 * x + 1, cap);
    if (in_s[x] != 0) flow.add(source, 2 * x, single_s ? 2 : 1);
    if (in_t[x] != 0) flow.add(2 * x + 1, sink, single_t ? 2 : 1);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!view.has_edge(e)) continue;
    auto [a, b] = g.endpoints(e);
    flow.add(2 * a + 1, 2 * b, 1, e);
    flow.add(2 * b + 1, 2 * a, 1, e);
  }
  if (!flow.augment(source, sink) || !flow.augment(source, sink)) return std::nullopt;

  std::vector<Path> found;
  std::vector<std::uint32_t> nodes;
  std::vector<EdgeId> edges;
  for (int k = 0; k < 2; ++k) {
    if (!flow.take_unit(source, sink, nodes, edges)) return std::nullopt;
    Path p;
    for (std::size_t i = 1; i + 1 < nodes.size(); i += 2) p.vertices.push_back(nodes[i] / 2);
    p.edges = edges;
    // Keep the segment from the last S vertex to the first T vertex after it.
    std::size_t first = 0;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      if (in_s[p.vertices[i]] != 0) first = i;
    }
    std::size_t last = first;
    while (in_t[p.vertices[last]] == 0) ++last;
    Path cut;
    cut.vertices.assign(p.vertices.begin() + static_cast<std::ptrdiff_t>(first),
                        p.vertices.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    cut.edges.assign(p.edges.begin() + static_cast<std::ptrdiff_t>(first),
                     p.edges.begin() + static_cast<std::ptrdiff_t>(last));
    found.push_back(std::move(cut));
  }
  if (found[1].front() < found[0].front()) std::swap(found[0], found[1]);
  return PathPair{std::move(found[0]), std::move(found[1])};
}

Path parity_path_in_block(const GraphView& view, VertexId u, VertexId v, Parity parity, const Circuit& odd) {
  std::vector<VertexId> ends{u, v};
  auto pair = two_disjoint_paths(view, ends, odd.vertices);
  if (!pair) throw std::logic_error("block is not 2-connected: no two disjoint paths to the odd circuit");
  Path from_u = pair->first.front() == u ? pair->first : pair->second;
  Path from_v = pair->first.front() == u ? pair->second : pair->first;
  auto i = odd.position(from_u.back());
  auto j = odd.position(from_v.back());
  auto [arc_a, arc_b] = odd.arcs(*i, *j);
  const std::size_t base = from_u.length() + from_v.length();
  const Path& arc = parity_of(base + arc_a.length()) == parity ? arc_a : arc_b;
  return from_u.joined(arc).joined(from_v.reversed());
}

namespace {

LocalColoring color_block(const Graph& g, std::span<const EdgeId> block) {
  LocalColoring c;
  std::unordered_map<VertexId, std::vector<Incidence>> adj;
  for (EdgeId e : block) {
    auto [a, b] = g.endpoints(e);
    adj[a].push_back({e, b});
    adj[b].push_back({e, a});
  }
  VertexId root = g.endpoints(block.front()).first;
  c.color[root] = 0;
  std::deque<VertexId> q{root};
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (const auto& inc : adj[x]) {
      auto it = c.color.find(inc.neighbor);
      if (it == c.color.end()) {
        c.color[inc.neighbor] = 1 - c.color[x];
        q.push_back(inc.neighbor);
      } else if (it->second == c.color[x]) {
        c.bipartite = false;
      }
    }
  }
  return c;
}

}  // namespace

std::optional<Path> parity_path(const GraphView& view, VertexId u, VertexId v, Parity parity) {
  const Graph& g = view.graph();
  if (u >= g.vertex_count() || v >= g.vertex_count() || !view.has_vertex(u) || !view.has_vertex(v)) {
    throw PreconditionError("parity_path: endpoint not in graph");
  }
  if (u == v) throw PreconditionError("parity_path: endpoints must differ");

  auto bd = blocks(view);
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  const auto nb = static_cast<std::uint32_t>(bd.blocks.size());
  // Block-cut tree over vertex nodes [0, n) and block nodes [n, n + nb).
  std::vector<std::vector<std::uint32_t>> tree(n + nb);
  for (std::uint32_t b = 0; b < nb; ++b) {
    for (VertexId x : block_vertices(g, bd.blocks[b])) {
      tree[x].push_back(n + b);
      tree[n + b].push_back(x);
    }
  }
  std::vector<std::uint32_t> prev(n + nb, kNone);
  std::deque<std::uint32_t> q{u};
  prev[u] = u;
  while (!q.empty() && prev[v] == kNone) {
    auto x = q.front();
    q.pop_front();
    for (auto y : tree[x]) {
      if (prev[y] == kNone) {
        prev[y] = x;
        q.push_back(y);
      }
    }
  }
  if (prev[v] == kNone) return std::nullopt;
  std::vector<std::uint32_t> route;
  for (auto x = static_cast<std::uint32_t>(v); x != u; x = prev[x]) route.push_back(x);
  route.push_back(u);
  std::reverse(route.begin(), route.end());

  struct Leg {
    std::uint32_t block;
    VertexId from;
    VertexId to;
    bool flexible;
  };
  std::vector<Leg> legs;
  for (std::size_t i = 1; i + 1 < route.size(); i += 2) {
    legs.push_back({route[i] - n, route[i - 1], route[i + 1], false});
  }
  std::vector<Path> pieces(legs.size());
  std::size_t forced = 0;
  std::optional<std::size_t> flex;
  std::vector<std::vector<std::uint8_t>> masks(legs.size());
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const auto& block = bd.blocks[legs[i].block];
    masks[i].assign(g.edge_count(), 0);
    for (EdgeId e : block) masks[i][e] = 1;
    GraphView bv(g, masks[i]);
    auto coloring = color_block(g, block);
    if (coloring.bipartite || flex) {
      pieces[i] = *shortest_path(bv, legs[i].from, legs[i].to);
      forced += pieces[i].length();
    } else {
      flex = i;
      legs[i].flexible = true;
    }
  }
  if (!flex) {
    if (parity_of(forced) != parity) return std::nullopt;
  } else {
    const Leg& leg = legs[*flex];
    GraphView bv(g, masks[*flex]);
    auto witness = is_bipartite(bv);
    Parity need = parity_of(forced) == parity ? Parity::even : Parity::odd;
    pieces[*flex] = parity_path_in_block(bv, leg.from, leg.to, need, witness.odd_circuit);
  }
  Path out = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) out = out.joined(pieces[i]);
  return out;
}

std::optional<Path> even_path_ge4(const Graph& g, VertexId u, VertexId v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw PreconditionError("even_path_ge4: endpoint not in graph");
  if (u == v) throw PreconditionError("even_path_ge4: endpoints must differ");
  std::vector<std::uint8_t> vmask(g.vertex_count(), 1);
  vmask[u] = 0;
  std::optional<VertexId> last;
  for (const auto& inc : g.incident(u)) {
    VertexId a = inc.neighbor;
    if (a == v || (last && *last == a)) continue;
    last = a;
    std::vector<std::uint8_t> emask(g.edge_count(), 1);
    for (const auto& at_a : g.incident(a)) {
      if (at_a.neighbor == v) emask[at_a.edge] = 0;
    }
    GraphView view(g, emask, vmask);
    auto p = parity_path(view, a, v, Parity::odd);
    if (p) {
      Path head{{u, a}, {inc.edge}};
      return head.joined(*p);
    }
  }
  return std::nullopt;
}

}  // namespace oddear
