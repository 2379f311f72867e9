#include "oddear/cycle_space.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "oddear/ears.hpp"
#include "oddear/errors.hpp"

namespace oddear {

Gf2Vec Gf2Vec::from_support(std::size_t dim, std::span<const std::uint32_t> support) {
  Gf2Vec v(dim);
  for (auto i : support) v.flip(i);
  return v;
}

void Gf2Vec::set(std::size_t i, bool on) {
  if (on) {
    words_[i / 64] |= 1ULL << (i % 64);
  } else {
    words_[i / 64] &= ~(1ULL << (i % 64));
  }
}

Gf2Vec& Gf2Vec::operator^=(const Gf2Vec& o) {
  if (o.dim_ != dim_) throw PreconditionError("gf2 dimension mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

std::size_t Gf2Vec::weight() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Gf2Vec::zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> Gf2Vec::lowest() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return std::nullopt;
}

std::vector<std::uint32_t> Gf2Vec::support() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1) out.push_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
  }
  return out;
}

Parity intersection_parity(const Gf2Vec& a, const Gf2Vec& b) {
  if (a.dim() != b.dim()) throw PreconditionError("intersection_parity: dimension mismatch");
  std::uint64_t acc = 0;
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) acc ^= wa[i] & wb[i];
  return std::popcount(acc) % 2 == 0 ? Parity::even : Parity::odd;
}

std::size_t gf2_rank(std::vector<Gf2Vec> rows) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto pivot = rows[i].lowest();
    if (!pivot) continue;
    ++rank;
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[j].get(*pivot)) rows[j] ^= rows[i];
    }
  }
  return rank;
}

bool same_span(const std::vector<Gf2Vec>& a, const std::vector<Gf2Vec>& b) {
  auto ra = gf2_rank(a);
  if (ra != gf2_rank(b)) return false;
  std::vector<Gf2Vec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return gf2_rank(both) == ra;
}

Gf2Vec edge_vector(const Graph& g, std::span<const EdgeId> edges) { return Gf2Vec::from_support(g.edge_count(), edges); }

void CircuitBasis::add(Circuit c) {
  vectors.push_back(edge_vector(*host, c.edges));
  circuits.push_back(std::move(c));
}

Circuit circuit_of(const Path& p, const Path& q) {
  Circuit c{p.vertices, p.edges};
  Path back = q.reversed();
  c.vertices.insert(c.vertices.end(), back.vertices.begin() + 1, back.vertices.end() - 1);
  c.edges.insert(c.edges.end(), back.edges.begin(), back.edges.end());
  return c;
}

CircuitBasis fundamental_basis(const Graph& g, std::span<const EdgeId> tree) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || tree.size() + 1 != n) throw PreconditionError("fundamental_basis: not a spanning tree");
  std::vector<std::uint8_t> in_tree(g.edge_count(), 0);
  for (EdgeId e : tree) {
    if (e >= g.edge_count() || in_tree[e] != 0) throw PreconditionError("fundamental_basis: bad tree edge");
    in_tree[e] = 1;
  }
  GraphView tv(g, in_tree);
  if (!is_connected(tv)) throw PreconditionError("fundamental_basis: not a spanning tree");
  CircuitBasis b{&g, {}, {}};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e] != 0) continue;
    auto [x, y] = g.endpoints(e);
    Path through = *shortest_path(tv, y, x);
    Path closing{{x, y}, {e}};
    Circuit c{closing.vertices, closing.edges};
    c.vertices.insert(c.vertices.end(), through.vertices.begin() + 1, through.vertices.end() - 1);
    c.edges.insert(c.edges.end(), through.edges.begin(), through.edges.end());
    b.add(std::move(c));
  }
  return b;
}

CircuitBasis fundamental_basis(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("fundamental_basis: graph not connected");
  std::vector<EdgeId> tree;
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::deque<VertexId> q;
  if (g.vertex_count() > 0) {
    q.push_back(0);
    seen[0] = 1;
  }
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (const auto& inc : g.incident(x)) {
      if (seen[inc.neighbor] != 0) continue;
      seen[inc.neighbor] = 1;
      tree.push_back(inc.edge);
      q.push_back(inc.neighbor);
    }
  }
  return fundamental_basis(g, tree);
}

CircuitBasis odd_circuit_basis(const Graph& g) {
  if (!is_two_connected(g)) throw PreconditionError("odd_circuit_basis: graph not 2-connected");
  auto bip = is_bipartite(g);
  if (bip.bipartite) throw PreconditionError("odd_circuit_basis: graph is bipartite");
  return odd_circuit_basis(g, bip.odd_circuit);
}

CircuitBasis odd_circuit_basis(const Graph& g, const Circuit& start) {
  if (!is_two_connected(g)) throw PreconditionError("odd_circuit_basis: graph not 2-connected");
  if (!is_valid_circuit(g, start) || !start.odd()) throw PreconditionError("odd_circuit_basis: start is not an odd circuit");
  auto d = complete_from(g, from_circuit(g, start));
  CircuitBasis b{&g, {}, {}};
  b.add(start);
  std::vector<std::uint8_t> prefix(g.edge_count(), 0);
  for (EdgeId e : start.edges) prefix[e] = 1;
  for (const Path& ear : d.paths) {
    GraphView view(g, prefix);
    Parity need = ear.odd() ? Parity::even : Parity::odd;
    Path q = parity_path_in_block(view, ear.front(), ear.back(), need, start);
    b.add(circuit_of(ear, q));
    for (EdgeId e : ear.edges) prefix[e] = 1;
  }
  return b;
}

TotallyOdd is_totally_odd(const CircuitBasis& basis) {
  for (const auto& c : basis.circuits) {
    if (!c.odd()) throw PreconditionError("is_totally_odd: even member");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (intersection_parity(basis.vectors[i], basis.vectors[j]) == Parity::even) return TotallyOdd{false, {{i, j}}};
    }
  }
  return {};
}

std::vector<std::vector<EdgeId>> all_circuits(const GraphView& view, std::size_t limit) {
  const Graph& g = view.graph();
  std::vector<std::vector<EdgeId>> out;
  std::vector<std::uint8_t> on(g.vertex_count(), 0);
  std::vector<EdgeId> stack;
  for (EdgeId low = 0; low < g.edge_count(); ++low) {
    if (!view.has_edge(low)) continue;
    auto [s, t] = g.endpoints(low);
    // Paths s -> t using only edges above `low`.
    auto dfs = [&](auto&& self, VertexId x) -> void {
      if (x == t) {
        std::vector<EdgeId> c = stack;
        c.push_back(low);
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
        if (out.size() > limit) throw ScaleBoundExceeded("circuit enumeration limit exceeded");
        return;
      }
      on[x] = 1;
      for (const auto& inc : g.incident(x)) {
        if (inc.edge <= low || !view.has_edge(inc.edge) || on[inc.neighbor] != 0) continue;
        stack.push_back(inc.edge);
        self(self, inc.neighbor);
        stack.pop_back();
      }
      on[x] = 0;
    };
    dfs(dfs, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oddear
