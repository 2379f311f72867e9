#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace oddear {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Orders "e2" before "e10": digit runs compare numerically, everything else bytewise.
bool natural_less(std::string_view a, std::string_view b);

struct EdgeSpec {
  std::string id;
  std::string u;
  std::string v;
};

struct Incidence {
  EdgeId edge;
  VertexId neighbor;
};

// Loopless multigraph with external string ids mapped to dense integers.
// Dense ids follow the natural order of the external ids, so every
// "smallest id" tie-break is reproducible. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(std::string name, std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges);

  // Vertices "1".."n" and edges "e1".."em" in the given order.
  static Graph from_pairs(std::string name, int n, const std::vector<std::pair<int, int>>& edges);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return ends_.size(); }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return ends_[e]; }
  VertexId opposite(EdgeId e, VertexId v) const { return ends_[e].first == v ? ends_[e].second : ends_[e].first; }
  bool incident_to(EdgeId e, VertexId v) const { return ends_[e].first == v || ends_[e].second == v; }
  std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  const std::string& vertex_id(VertexId v) const { return vertex_ids_[v]; }
  const std::string& edge_id(EdgeId e) const { return edge_ids_[e]; }
  std::optional<VertexId> find_vertex(std::string_view id) const;
  std::optional<EdgeId> find_edge(std::string_view id) const;
  VertexId vertex(std::string_view id) const;  // throws PreconditionError when absent
  EdgeId edge(std::string_view id) const;

  bool is_simple() const;

 private:
  std::string name_;
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<std::pair<VertexId, VertexId>> ends_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

// Read-only restriction of a graph to masked edges and vertices. An empty
// mask means "everything present". An edge is present only when both of its
// endpoints are. The masks are borrowed and must outlive the view.
class GraphView {
 public:
  GraphView(const Graph& g) : g_(&g) {}  // NOLINT(google-explicit-constructor)
  GraphView(const Graph& g, std::span<const std::uint8_t> edge_mask, std::span<const std::uint8_t> vertex_mask = {})
      : g_(&g), edge_mask_(edge_mask), vertex_mask_(vertex_mask) {}

  const Graph& graph() const { return *g_; }
  bool has_vertex(VertexId v) const { return vertex_mask_.empty() || vertex_mask_[v] != 0; }
  bool has_edge(EdgeId e) const {
    if (!edge_mask_.empty() && edge_mask_[e] == 0) return false;
    auto [a, b] = g_->endpoints(e);
    return has_vertex(a) && has_vertex(b);
  }
  std::size_t present_vertex_count() const;

 private:
  const Graph* g_;
  std::span<const std::uint8_t> edge_mask_;
  std::span<const std::uint8_t> vertex_mask_;
};

// Alternating vertex/edge sequence; vertices.size() == edges.size() + 1.
// A single vertex with no edges is a trivial path (used internally only).
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  bool odd() const { return length() % 2 == 1; }
  Path reversed() const;
  // this followed by other; other must start where this ends.
  Path joined(const Path& other) const;
  friend bool operator==(const Path&, const Path&) = default;
};

// Cyclic sequence: edges[i] joins vertices[i] and vertices[(i + 1) % n].
struct Circuit {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool odd() const { return length() % 2 == 1; }
  // The two arcs between positions i and j (i != j): first goes forward from i.
  std::pair<Path, Path> arcs(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> position(VertexId v) const;
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

bool is_valid_path(const Graph& g, const Path& p);  // length >= 1, simple, incident
bool is_valid_circuit(const Graph& g, const Circuit& c);

// Rebuild a path or circuit from an unordered or ordered edge list.
std::optional<Path> path_from_edges(const Graph& g, std::span<const EdgeId> edges);
std::optional<Circuit> circuit_from_edges(const Graph& g, std::span<const EdgeId> edges);

struct Subgraph {
  Graph graph;
  std::vector<VertexId> vertex_in_parent;
  std::vector<EdgeId> edge_in_parent;

  EdgeId lift(EdgeId e) const { return edge_in_parent[e]; }
  VertexId lift_vertex(VertexId v) const { return vertex_in_parent[v]; }
  Path lift(const Path& p) const;
  Circuit lift(const Circuit& c) const;
};

// Subgraph spanned by the given edges; ids and names are preserved.
Subgraph edge_induced(const Graph& g, std::span<const EdgeId> edges, std::string name = {});
// Subgraph of the present part of a view (isolated present vertices kept).
Subgraph materialize(const GraphView& view, std::string name = {});

struct BlockDecomposition {
  std::vector<std::vector<EdgeId>> blocks;  // each sorted; blocks sorted by first edge
  std::vector<VertexId> cut_vertices;       // sorted
};

BlockDecomposition blocks(const GraphView& g);
std::vector<VertexId> block_vertices(const Graph& g, std::span<const EdgeId> block);
bool is_connected(const GraphView& g);
bool is_two_connected(const GraphView& g);

struct BipartiteResult {
  bool bipartite = true;
  std::vector<std::int8_t> color;  // 0/1 per present vertex, -1 elsewhere
  Circuit odd_circuit;             // set when !bipartite
};

BipartiteResult is_bipartite(const GraphView& g);

struct SimpleGraph {
  Graph graph;  // same vertex ids; edge ids are the representatives' ids
  std::vector<EdgeId> representative;  // simple edge -> multigraph edge
};

SimpleGraph underlying_simple(const Graph& g);

std::size_t cyclomatic_number(const Graph& g);  // |E| - |V| + components

// Generators for the named families.
Graph gen_cycle(int n, std::string name = {});
Graph gen_complete(int n, std::string name = {});
Graph gen_c3plus();
Graph gen_c5plus();  // C5 with the chord 1-3
Graph gen_hk(int k);
Graph gen_petersen_minus_vertex();
// Each edge replaced by a path of the given odd length (keyed by external edge id).
Graph gen_totally_odd_subdivision(const Graph& h, const std::map<std::string, int>& lengths);

}  // namespace oddear
