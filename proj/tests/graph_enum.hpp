#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oddear/graph.hpp"

namespace oddear::testing {

// Simple graph on at most 32 vertices as adjacency bitmasks.
struct Small {
  int n = 0;
  std::vector<std::uint32_t> adj;
  bool has(int a, int b) const { return ((adj[a] >> b) & 1U) != 0; }
  void add(int a, int b) {
    adj[a] |= 1U << b;
    adj[b] |= 1U << a;
  }
  int edges() const {
    int m = 0;
    for (auto a : adj) m += std::popcount(a);
    return m / 2;
  }
};

// Colour refinement; colours are renumbered 0.. in an isomorphism-invariant order.
inline std::vector<int> refine(const Small& g, std::vector<int> color) {
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int u = 0; u < g.n; ++u) {
        if (g.has(u, v)) nb.push_back(color[u]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto order = sig;
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    for (int v = 0; v < g.n; ++v) color[v] = static_cast<int>(std::lower_bound(order.begin(), order.end(), sig[v]) - order.begin());
    if (order.size() == classes) return color;
    classes = order.size();
  }
}

// Smallest adjacency string over the leaves of the individualization-refinement tree.
inline void canon_search(const Small& g, std::vector<int> color, std::string& best) {
  color = refine(g, color);
  std::vector<int> count(g.n, 0);
  for (int c : color) ++count[c];
  int cell = -1;
  for (int c = 0; c < g.n && cell < 0; ++c) {
    if (count[c] > 1) cell = c;
  }
  if (cell < 0) {
    std::vector<int> at(g.n);
    for (int v = 0; v < g.n; ++v) at[color[v]] = v;
    std::string s;
    for (int i = 0; i < g.n; ++i) {
      for (int j = i + 1; j < g.n; ++j) s.push_back(g.has(at[i], at[j]) ? '1' : '0');
    }
    if (best.empty() || s < best) best = s;
    return;
  }
  for (int v = 0; v < g.n; ++v) {
    if (color[v] != cell) continue;
    std::vector<int> next(g.n);
    for (int u = 0; u < g.n; ++u) next[u] = 2 * color[u] + (color[u] == cell && u != v ? 1 : 0);
    canon_search(g, next, best);
  }
}

inline std::string canonical(const Small& g) {
  std::string best;
  canon_search(g, std::vector<int>(g.n, 0), best);
  return std::to_string(g.n) + ":" + best;
}

inline Graph to_graph(const Small& g, const std::string& name) {
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < g.n; ++a) {
    for (int b = a + 1; b < g.n; ++b) {
      if (g.has(a, b)) es.emplace_back(a + 1, b + 1);
    }
  }
  return Graph::from_pairs(name, g.n, es);
}

// Every 2-connected simple graph with at most max_edges edges, one per
// isomorphism class, grown by ears from circuits.
inline std::vector<Graph> two_connected_graphs(int max_edges) {
  std::vector<std::map<std::string, Small>> level(max_edges + 1);
  for (int n = 3; n <= max_edges; ++n) {
    Small c{n, std::vector<std::uint32_t>(n, 0)};
    for (int i = 0; i < n; ++i) c.add(i, (i + 1) % n);
    level[n].emplace(canonical(c), c);
  }
  for (int m = 3; m <= max_edges; ++m) {
    for (const auto& [key, g] : level[m]) {
      for (int a = 0; a < g.n; ++a) {
        for (int b = a + 1; b < g.n; ++b) {
          for (int len = 1; m + len <= max_edges; ++len) {
            if (len == 1 && g.has(a, b)) continue;
            Small h = g;
            int prev = a;
            for (int i = 1; i < len; ++i) {
              h.adj.push_back(0);
              ++h.n;
              h.add(prev, h.n - 1);
              prev = h.n - 1;
            }
            h.add(prev, b);
            level[m + len].emplace(canonical(h), h);
          }
        }
      }
    }
  }
  std::vector<Graph> out;
  for (int m = 3; m <= max_edges; ++m) {
    int i = 0;
    for (const auto& [key, g] : level[m]) out.push_back(to_graph(g, "m" + std::to_string(m) + "-" + std::to_string(i++)));
  }
  return out;
}

}  // namespace oddear::testing
