#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "normality/enumeration.hpp"
#include "normality/graph.hpp"

namespace normality::gen {

inline Graph random_tree(int n, std::mt19937& rng) {
  if (n <= 2) return n == 1 ? Graph(1) : Graph::from_edges(2, {{0, 1}});
  std::uniform_int_distribution<int> symbol(0, n - 1);
  std::vector<int> seq(n - 2);
  for (auto& x : seq) x = symbol(rng);
  return prufer_decode(n, seq);
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph::from_edges(g.order(), edges);
}

// Random connected graph: a random tree plus `extra` random non-edges.
inline Graph random_connected(int n, int extra, std::mt19937& rng) {
  Graph g = random_tree(n, rng);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  for (int tries = 0; extra > 0 && tries < 50 * (extra + 1); ++tries) {
    const int u = vertex(rng), v = vertex(rng);
    if (u == v || g.has_edge(u, v)) continue;
    g = add_edge(g, u, v);
    --extra;
  }
  return g;
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n)});
  return Graph::from_edges(n, edges);
}

// Brute-force isomorphism test over all bijections; tiny graphs only.
inline bool isomorphic_brute_force(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : a.edges())
      if (!b.has_edge(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace normality::gen
