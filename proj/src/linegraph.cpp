#include "oddear/linegraph.hpp"

#include <algorithm>
#include <set>

#include "oddear/errors.hpp"

namespace oddear {

Graph line_graph(const Graph& h) {
  std::vector<std::string> vs;
  for (EdgeId e = 0; e < h.edge_count(); ++e) vs.push_back(h.edge_id(e));
  std::set<std::pair<EdgeId, EdgeId>> adj;
  for (VertexId x = 0; x < h.vertex_count(); ++x) {
    const auto& inc = h.incident(x);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        adj.insert({std::min(inc[i].edge, inc[j].edge), std::max(inc[i].edge, inc[j].edge)});
      }
    }
  }
  std::vector<EdgeSpec> es;
  for (auto [a, b] : adj) es.push_back({h.edge_id(a) + "~" + h.edge_id(b), h.edge_id(a), h.edge_id(b)});
  return Graph("L(" + h.name() + ")", vs, es);
}

namespace {

// Krausz partition search: edges of g split into cliques, each vertex in at most two.
class Krausz {
 public:
  explicit Krausz(const Graph& g) : g_(g), n_(g.vertex_count()), adj_(n_, std::vector<char>(n_, 0)), edge_at_(n_, std::vector<EdgeId>(n_, 0)),
                                    used_(g.edge_count(), 0), slots_(n_, 0), cliques_of_(n_) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto [a, b] = g.endpoints(e);
      adj_[a][b] = adj_[b][a] = 1;
      edge_at_[a][b] = edge_at_[b][a] = e;
    }
  }

  bool solve() { return search(); }
  const std::vector<std::vector<VertexId>>& cliques() const { return cliques_; }
  const std::vector<std::vector<std::size_t>>& cliques_of() const { return cliques_of_; }

 private:
  std::size_t unused_degree(VertexId x) const {
    std::size_t d = 0;
    for (const auto& inc : g_.incident(x)) d += used_[inc.edge] == 0 ? 1 : 0;
    return d;
  }

  bool search() {
    std::optional<EdgeId> next;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (used_[e] == 0) {
        next = e;
        break;
      }
    }
    if (!next) return true;
    auto [u, v] = g_.endpoints(*next);
    if (slots_[u] >= 2 || slots_[v] >= 2) return false;
    std::vector<VertexId> cand;
    for (VertexId w = 0; w < n_; ++w) {
      if (w == u || w == v || adj_[u][w] == 0 || adj_[v][w] == 0) continue;
      if (used_[edge_at_[u][w]] != 0 || used_[edge_at_[v][w]] != 0 || slots_[w] >= 2) continue;
      cand.push_back(w);
    }
    // The clique through uv is all remaining common neighbours, or all but one of them.
    const std::size_t k = cand.size();
    for (std::size_t skip = 0; skip <= k; ++skip) {
      std::vector<VertexId> clique{u, v};
      for (std::size_t i = 0; i < k; ++i) {
        if (i != (skip == 0 ? k : skip - 1)) clique.push_back(cand[i]);
      }
      bool ok = true;
      for (std::size_t i = 2; i < clique.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < clique.size() && ok; ++j) {
          if (adj_[clique[i]][clique[j]] == 0 || used_[edge_at_[clique[i]][clique[j]]] != 0) ok = false;
        }
      }
      if (!ok) continue;
      place(clique, 1);
      bool fine = true;
      for (VertexId x : clique) {
        if (slots_[x] == 2 && unused_degree(x) != 0) fine = false;
      }
      if (fine && search()) return true;
      place(clique, 0);
    }
    return false;
  }

  void place(const std::vector<VertexId>& clique, char on) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) used_[edge_at_[clique[i]][clique[j]]] = on;
    }
    if (on != 0) {
      for (VertexId x : clique) {
        ++slots_[x];
        cliques_of_[x].push_back(cliques_.size());
      }
      cliques_.push_back(clique);
    } else {
      for (VertexId x : clique) {
        --slots_[x];
        cliques_of_[x].pop_back();
      }
      cliques_.pop_back();
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::vector<char>> adj_;
  std::vector<std::vector<EdgeId>> edge_at_;
  std::vector<char> used_;
  std::vector<int> slots_;
  std::vector<std::vector<std::size_t>> cliques_of_;
  std::vector<std::vector<VertexId>> cliques_;
};

}  // namespace

std::optional<Graph> recognize_line_graph(const Graph& g) {
  if (!g.is_simple()) throw PreconditionError("recognize_line_graph: input must be simple");
  Krausz k(g);
  if (!k.solve()) return std::nullopt;
  std::size_t next = k.cliques().size();
  std::vector<EdgeSpec> es;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    const auto& cs = k.cliques_of()[x];
    std::size_t a = cs.size() >= 1 ? cs[0] : next++;
    std::size_t b = cs.size() >= 2 ? cs[1] : next++;
    es.push_back({g.vertex_id(x), "r" + std::to_string(a), "r" + std::to_string(b)});
  }
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < next; ++i) vs.push_back("r" + std::to_string(i));
  return Graph("root(" + g.name() + ")", vs, es);
}

LinePipelineVerdict h_perfect_line_pipeline(const Graph& g) {
  LinePipelineVerdict v;
  v.root = recognize_line_graph(g);
  if (!v.root) return v;
  auto hp = line_graph_h_perfect(*v.root);
  v.kind = hp.h_perfect ? LinePipelineVerdict::Kind::h_perfect : LinePipelineVerdict::Kind::not_h_perfect;
  v.obstruction = hp.obstruction;
  return v;
}

}  // namespace oddear
