#include "oddear/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "oddear/errors.hpp"

namespace oddear {

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t i2 = i;
      std::size_t j2 = j;
      while (i2 < a.size() && digit(a[i2])) ++i2;
      while (j2 < b.size() && digit(b[j2])) ++j2;
      auto ra = a.substr(i, i2 - i);
      auto rb = b.substr(j, j2 - j);
      while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
      while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

Graph::Graph(std::string name, std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges)
    : name_(std::move(name)) {
  std::sort(vertex_ids.begin(), vertex_ids.end(), natural_less);
  for (std::size_t i = 1; i < vertex_ids.size(); ++i) {
    if (vertex_ids[i] == vertex_ids[i - 1]) throw PreconditionError("duplicate vertex id '" + vertex_ids[i] + "'");
  }
  vertex_ids_ = std::move(vertex_ids);
  vertex_index_.reserve(vertex_ids_.size());
  for (VertexId v = 0; v < vertex_ids_.size(); ++v) vertex_index_.emplace(vertex_ids_[v], v);

  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& x, const EdgeSpec& y) { return natural_less(x.id, y.id); });
  edge_ids_.reserve(edges.size());
  ends_.reserve(edges.size());
  edge_index_.reserve(edges.size());
  adjacency_.resize(vertex_ids_.size());
  for (const auto& spec : edges) {
    if (!edge_ids_.empty() && edge_ids_.back() == spec.id) throw PreconditionError("duplicate edge id '" + spec.id + "'");
    auto u = vertex_index_.find(spec.u);
    auto v = vertex_index_.find(spec.v);
    if (u == vertex_index_.end() || v == vertex_index_.end()) {
      throw PreconditionError("edge '" + spec.id + "' has an unknown endpoint");
    }
    if (u->second == v->second) throw PreconditionError("edge '" + spec.id + "' is a loop");
    auto e = static_cast<EdgeId>(ends_.size());
    edge_ids_.push_back(spec.id);
    edge_index_.emplace(spec.id, e);
    ends_.emplace_back(u->second, v->second);
    adjacency_[u->second].push_back({e, v->second});
    adjacency_[v->second].push_back({e, u->second});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(), [](const Incidence& x, const Incidence& y) {
      return x.neighbor != y.neighbor ? x.neighbor < y.neighbor : x.edge < y.edge;
    });
  }
}

Graph Graph::from_pairs(std::string name, int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::string> vs;
  for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    es.push_back({"e" + std::to_string(i + 1), std::to_string(edges[i].first), std::to_string(edges[i].second)});
  }
  return Graph(std::move(name), std::move(vs), std::move(es));
}

std::optional<VertexId> Graph::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) throw PreconditionError("unknown vertex '" + std::string(id) + "'");
  return *v;
}

EdgeId Graph::edge(std::string_view id) const {
  auto e = find_edge(id);
  if (!e) throw PreconditionError("unknown edge '" + std::string(id) + "'");
  return *e;
}

bool Graph::is_simple() const {
  for (const auto& list : adjacency_) {
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].neighbor == list[i - 1].neighbor) return false;
    }
  }
  return true;
}

std::size_t GraphView::present_vertex_count() const {
  if (vertex_mask_.empty()) return g_->vertex_count();
  return static_cast<std::size_t>(std::count_if(vertex_mask_.begin(), vertex_mask_.end(), [](auto x) { return x != 0; }));
}

Path Path::reversed() const {
  Path r{{vertices.rbegin(), vertices.rend()}, {edges.rbegin(), edges.rend()}};
  return r;
}

Path Path::joined(const Path& other) const {
  Path r = *this;
  r.vertices.insert(r.vertices.end(), other.vertices.begin() + 1, other.vertices.end());
  r.edges.insert(r.edges.end(), other.edges.begin(), other.edges.end());
  return r;
}

std::pair<Path, Path> Circuit::arcs(std::size_t i, std::size_t j) const {
  const std::size_t n = vertices.size();
  Path fwd;
  fwd.vertices.push_back(vertices[i]);
  for (std::size_t k = i; k != j; k = (k + 1) % n) {
    fwd.edges.push_back(edges[k]);
    fwd.vertices.push_back(vertices[(k + 1) % n]);
  }
  Path bwd;
  bwd.vertices.push_back(vertices[i]);
  for (std::size_t k = i; k != j; k = (k + n - 1) % n) {
    bwd.edges.push_back(edges[(k + n - 1) % n]);
    bwd.vertices.push_back(vertices[(k + n - 1) % n]);
  }
  return {std::move(fwd), std::move(bwd)};
}

std::optional<std::size_t> Circuit::position(VertexId v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.edges.empty() || p.vertices.size() != p.edges.size() + 1) return false;
  std::set<VertexId> seen;
  for (VertexId v : p.vertices) {
    if (v >= g.vertex_count() || !seen.insert(v).second) return false;
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    EdgeId e = p.edges[i];
    if (e >= g.edge_count()) return false;
    auto [a, b] = g.endpoints(e);
    bool ok = (a == p.vertices[i] && b == p.vertices[i + 1]) || (b == p.vertices[i] && a == p.vertices[i + 1]);
    if (!ok) return false;
  }
  return true;
}

bool is_valid_circuit(const Graph& g, const Circuit& c) {
  const std::size_t n = c.vertices.size();
  if (n < 2 || c.edges.size() != n) return false;
  std::set<VertexId> seen;
  for (VertexId v : c.vertices) {
    if (v >= g.vertex_count() || !seen.insert(v).second) return false;
  }
  std::set<EdgeId> used;
  for (std::size_t i = 0; i < n; ++i) {
    EdgeId e = c.edges[i];
    if (e >= g.edge_count() || !used.insert(e).second) return false;
    auto [a, b] = g.endpoints(e);
    VertexId x = c.vertices[i];
    VertexId y = c.vertices[(i + 1) % n];
    if (!((a == x && b == y) || (a == y && b == x))) return false;
  }
  return true;
}

namespace {

// Degree of each vertex inside an edge list; empty optional on duplicates or bad ids.
std::optional<std::map<VertexId, int>> edge_list_degrees(const Graph& g, std::span<const EdgeId> edges) {
  std::set<EdgeId> distinct;
  std::map<VertexId, int> deg;
  for (EdgeId e : edges) {
    if (e >= g.edge_count() || !distinct.insert(e).second) return std::nullopt;
    auto [a, b] = g.endpoints(e);
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

// Walk from start consuming every edge of the list exactly once.
std::optional<Path> walk(const Graph& g, std::span<const EdgeId> edges, VertexId start, EdgeId first) {
  std::set<EdgeId> remaining(edges.begin(), edges.end());
  Path p;
  p.vertices.push_back(start);
  VertexId cur = start;
  EdgeId next = first;
  while (true) {
    remaining.erase(next);
    p.edges.push_back(next);
    cur = g.opposite(next, cur);
    p.vertices.push_back(cur);
    if (remaining.empty()) break;
    std::optional<EdgeId> step;
    for (const auto& inc : g.incident(cur)) {
      if (remaining.count(inc.edge) != 0) {
        step = inc.edge;
        break;
      }
    }
    if (!step) return std::nullopt;
    next = *step;
  }
  return p;
}

}  // namespace

std::optional<Path> path_from_edges(const Graph& g, std::span<const EdgeId> edges) {
  if (edges.empty()) return std::nullopt;
  auto deg = edge_list_degrees(g, edges);
  if (!deg) return std::nullopt;
  int ones = 0;
  for (auto [v, d] : *deg) {
    if (d == 1) ++ones;
    else if (d != 2) return std::nullopt;
  }
  if (ones != 2) return std::nullopt;
  auto [a, b] = g.endpoints(edges[0]);
  VertexId start = (*deg)[a] == 1 ? a : b;
  if ((*deg)[start] != 1) return std::nullopt;
  auto p = walk(g, edges, start, edges[0]);
  if (!p || !is_valid_path(g, *p)) return std::nullopt;
  return p;
}

std::optional<Circuit> circuit_from_edges(const Graph& g, std::span<const EdgeId> edges) {
  if (edges.size() < 2) return std::nullopt;
  auto deg = edge_list_degrees(g, edges);
  if (!deg) return std::nullopt;
  for (auto [v, d] : *deg) {
    if (d != 2) return std::nullopt;
  }
  auto [a, b] = g.endpoints(edges[0]);
  VertexId start = a;
  if (edges.size() >= 3 && g.incident_to(edges[1], a)) start = b;
  auto p = walk(g, edges, start, edges[0]);
  if (!p || p->vertices.back() != start) return std::nullopt;
  Circuit c;
  c.vertices.assign(p->vertices.begin(), p->vertices.end() - 1);
  c.edges = p->edges;
  if (!is_valid_circuit(g, c)) return std::nullopt;
  return c;
}

Path Subgraph::lift(const Path& p) const {
  Path r;
  for (VertexId v : p.vertices) r.vertices.push_back(vertex_in_parent[v]);
  for (EdgeId e : p.edges) r.edges.push_back(edge_in_parent[e]);
  return r;
}

Circuit Subgraph::lift(const Circuit& c) const {
  Circuit r;
  for (VertexId v : c.vertices) r.vertices.push_back(vertex_in_parent[v]);
  for (EdgeId e : c.edges) r.edges.push_back(edge_in_parent[e]);
  return r;
}

namespace {

Subgraph build_subgraph(const Graph& g, std::vector<VertexId> vs, std::vector<EdgeId> es, std::string name) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::sort(es.begin(), es.end());
  std::vector<std::string> vnames;
  vnames.reserve(vs.size());
  for (VertexId v : vs) vnames.push_back(g.vertex_id(v));
  std::vector<EdgeSpec> specs;
  specs.reserve(es.size());
  for (EdgeId e : es) {
    auto [a, b] = g.endpoints(e);
    specs.push_back({g.edge_id(e), g.vertex_id(a), g.vertex_id(b)});
  }
  Subgraph s{Graph(name.empty() ? g.name() : std::move(name), std::move(vnames), std::move(specs)), std::move(vs), std::move(es)};
  return s;
}

}  // namespace

Subgraph edge_induced(const Graph& g, std::span<const EdgeId> edges, std::string name) {
  std::vector<EdgeId> es(edges.begin(), edges.end());
  std::vector<VertexId> vs;
  for (EdgeId e : es) {
    auto [a, b] = g.endpoints(e);
    vs.push_back(a);
    vs.push_back(b);
  }
  return build_subgraph(g, std::move(vs), std::move(es), std::move(name));
}

Subgraph materialize(const GraphView& view, std::string name) {
  const Graph& g = view.graph();
  std::vector<VertexId> vs;
  std::vector<EdgeId> es;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (view.has_vertex(v)) vs.push_back(v);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (view.has_edge(e)) es.push_back(e);
  }
  return build_subgraph(g, std::move(vs), std::move(es), std::move(name));
}

BlockDecomposition blocks(const GraphView& view) {
  const Graph& g = view.graph();
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t kUnseen = 0;
  std::vector<std::uint32_t> disc(n, kUnseen);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::uint8_t> is_cut(n, 0);
  BlockDecomposition out;
  std::uint32_t timer = 0;

  struct Frame {
    VertexId v;
    EdgeId via;  // tree edge into v, or edge_count() for roots
    std::size_t next;
  };
  const auto no_edge = static_cast<EdgeId>(g.edge_count());

  for (VertexId root = 0; root < n; ++root) {
    if (!view.has_vertex(root) || disc[root] != kUnseen) continue;
    std::vector<Frame> stack{{root, no_edge, 0}};
    disc[root] = low[root] = ++timer;
    int root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const Incidence& step = inc[f.next++];
        if (step.edge == f.via || !view.has_edge(step.edge)) continue;
        VertexId w = step.neighbor;
        if (disc[w] == kUnseen) {
          edge_stack.push_back(step.edge);
          disc[w] = low[w] = ++timer;
          if (f.v == root) ++root_children;
          stack.push_back({w, step.edge, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(step.edge);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      VertexId parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) {
        if (parent != root) is_cut[parent] = 1;
        std::vector<EdgeId> block;
        while (true) {
          EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == done.via) break;
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
    if (root_children >= 2) is_cut[root] = 1;
  }
  std::sort(out.blocks.begin(), out.blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (VertexId v = 0; v < n; ++v) {
    if (is_cut[v] != 0) out.cut_vertices.push_back(v);
  }
  return out;
}

std::vector<VertexId> block_vertices(const Graph& g, std::span<const EdgeId> block) {
  std::vector<VertexId> vs;
  for (EdgeId e : block) {
    auto [a, b] = g.endpoints(e);
    vs.push_back(a);
    vs.push_back(b);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool is_connected(const GraphView& view) {
  const Graph& g = view.graph();
  std::optional<VertexId> start;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (view.has_vertex(v)) {
      start = v;
      break;
    }
  }
  if (!start) return true;
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::vector<VertexId> todo{*start};
  seen[*start] = 1;
  std::size_t reached = 1;
  while (!todo.empty()) {
    VertexId v = todo.back();
    todo.pop_back();
    for (const auto& inc : g.incident(v)) {
      if (!view.has_edge(inc.edge) || seen[inc.neighbor] != 0) continue;
      seen[inc.neighbor] = 1;
      ++reached;
      todo.push_back(inc.neighbor);
    }
  }
  return reached == view.present_vertex_count();
}

bool is_two_connected(const GraphView& view) {
  if (view.present_vertex_count() < 3 || !is_connected(view)) return false;
  auto bd = blocks(view);
  return bd.blocks.size() == 1 && block_vertices(view.graph(), bd.blocks.front()).size() >= 3;
}

BipartiteResult is_bipartite(const GraphView& view) {
  const Graph& g = view.graph();
  const std::size_t n = g.vertex_count();
  BipartiteResult r;
  r.color.assign(n, -1);
  std::vector<EdgeId> parent_edge(n, 0);
  std::vector<std::uint32_t> depth(n, 0);
  for (VertexId root = 0; root < n; ++root) {
    if (!view.has_vertex(root) || r.color[root] != -1) continue;
    r.color[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(v)) {
        if (!view.has_edge(inc.edge)) continue;
        VertexId w = inc.neighbor;
        if (r.color[w] == -1) {
          r.color[w] = static_cast<std::int8_t>(1 - r.color[v]);
          parent_edge[w] = inc.edge;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (r.color[w] == r.color[v]) {
          // Close the odd circuit through the BFS tree.
          std::vector<VertexId> left{v};
          std::vector<EdgeId> left_edges;
          std::vector<VertexId> right{w};
          std::vector<EdgeId> right_edges;
          VertexId a = v;
          VertexId b = w;
          while (depth[a] > depth[b]) {
            left_edges.push_back(parent_edge[a]);
            a = g.opposite(parent_edge[a], a);
            left.push_back(a);
          }
          while (depth[b] > depth[a]) {
            right_edges.push_back(parent_edge[b]);
            b = g.opposite(parent_edge[b], b);
            right.push_back(b);
          }
          while (a != b) {
            left_edges.push_back(parent_edge[a]);
            a = g.opposite(parent_edge[a], a);
            left.push_back(a);
            right_edges.push_back(parent_edge[b]);
            b = g.opposite(parent_edge[b], b);
            right.push_back(b);
          }
          // left: v .. lca, right: w .. lca. Circuit: lca .. v, edge, w .. lca.
          Circuit c;
          for (auto it = left.rbegin(); it != left.rend(); ++it) c.vertices.push_back(*it);
          for (auto it = left_edges.rbegin(); it != left_edges.rend(); ++it) c.edges.push_back(*it);
          c.edges.push_back(inc.edge);
          for (std::size_t i = 0; i + 1 < right.size(); ++i) c.vertices.push_back(right[i]);
          for (EdgeId e : right_edges) c.edges.push_back(e);
          r.bipartite = false;
          r.odd_circuit = std::move(c);
          return r;
        }
      }
    }
  }
  return r;
}

SimpleGraph underlying_simple(const Graph& g) {
  std::map<std::pair<VertexId, VertexId>, EdgeId> rep;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    auto key = std::minmax(a, b);
    rep.emplace(key, e);  // first insertion is the smallest id
  }
  std::vector<EdgeId> reps;
  for (auto& [key, e] : rep) reps.push_back(e);
  std::sort(reps.begin(), reps.end());
  std::vector<std::string> vs;
  for (VertexId v = 0; v < g.vertex_count(); ++v) vs.push_back(g.vertex_id(v));
  std::vector<EdgeSpec> specs;
  for (EdgeId e : reps) {
    auto [a, b] = g.endpoints(e);
    specs.push_back({g.edge_id(e), g.vertex_id(a), g.vertex_id(b)});
  }
  return SimpleGraph{Graph(g.name(), std::move(vs), std::move(specs)), std::move(reps)};
}

std::size_t cyclomatic_number(const Graph& g) {
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t merges = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      ++merges;
    }
  }
  return g.edge_count() - merges;
}

Graph gen_cycle(int n, std::string name) {
  if (n < 2) throw PreconditionError("a cycle needs at least 2 vertices");
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i) es.emplace_back(i, i % n + 1);
  return Graph::from_pairs(name.empty() ? "C" + std::to_string(n) : std::move(name), n, es);
}

Graph gen_complete(int n, std::string name) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
  }
  return Graph::from_pairs(name.empty() ? "K" + std::to_string(n) : std::move(name), n, es);
}

Graph gen_c3plus() { return Graph::from_pairs("C3plus", 3, {{1, 2}, {2, 3}, {3, 1}, {1, 2}}); }

Graph gen_c5plus() { return Graph::from_pairs("C5plus", 5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}}); }

Graph gen_hk(int k) {
  if (k < 2) throw PreconditionError("H_k needs k >= 2");
  std::vector<std::string> vs{"u", "v"};
  std::vector<EdgeSpec> es{{"uv", "u", "v"}};
  for (int i = 1; i <= k; ++i) {
    auto s = std::to_string(i);
    std::string c = "c" + s;
    std::string d = "d" + s;
    std::string e = "e" + s;
    vs.insert(vs.end(), {c, d, e});
    es.push_back({"v-" + c, "v", c});
    es.push_back({c + "-" + d, c, d});
    es.push_back({d + "-" + e, d, e});
    es.push_back({e + "-u", e, "u"});
    es.push_back({"u-" + c, "u", c});
  }
  return Graph("H" + std::to_string(k), std::move(vs), std::move(es));
}

Graph gen_petersen_minus_vertex() {
  std::vector<std::string> vs{"o2", "o3", "o4", "o5", "i1", "i2", "i3", "i4", "i5"};
  std::vector<EdgeSpec> es{
      {"o2o3", "o2", "o3"}, {"o3o4", "o3", "o4"}, {"o4o5", "o4", "o5"},
      {"i1i3", "i1", "i3"}, {"i3i5", "i3", "i5"}, {"i5i2", "i5", "i2"}, {"i2i4", "i2", "i4"}, {"i4i1", "i4", "i1"},
      {"o2i2", "o2", "i2"}, {"o3i3", "o3", "i3"}, {"o4i4", "o4", "i4"}, {"o5i5", "o5", "i5"},
  };
  return Graph("petersen-minus-vertex", std::move(vs), std::move(es));
}

Graph gen_totally_odd_subdivision(const Graph& h, const std::map<std::string, int>& lengths) {
  std::vector<std::string> vs;
  for (VertexId v = 0; v < h.vertex_count(); ++v) vs.push_back(h.vertex_id(v));
  std::vector<EdgeSpec> es;
  for (auto& [id, len] : lengths) {
    if (!h.find_edge(id)) throw PreconditionError("length given for unknown edge '" + id + "'");
    if (len < 1 || len % 2 == 0) throw PreconditionError("edge '" + id + "' needs an odd length >= 1");
  }
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const std::string& id = h.edge_id(e);
    auto it = lengths.find(id);
    int len = it == lengths.end() ? 1 : it->second;
    auto [a, b] = h.endpoints(e);
    if (len == 1) {
      es.push_back({id, h.vertex_id(a), h.vertex_id(b)});
      continue;
    }
    std::string prev = h.vertex_id(a);
    for (int i = 1; i <= len; ++i) {
      std::string next = i == len ? h.vertex_id(b) : id + "." + std::to_string(i);
      if (i < len) vs.push_back(next);
      es.push_back({id + "/" + std::to_string(i), prev, next});
      prev = next;
    }
  }
  return Graph(h.name() + "-sub", std::move(vs), std::move(es));
}

}  // namespace oddear
