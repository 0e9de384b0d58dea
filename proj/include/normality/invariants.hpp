#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "normality/errors.hpp"
#include "normality/graph.hpp"

namespace normality {

/**
 * Per-vertex distance invariants of a connected graph.
 *
 * ecc(v) is the largest distance from v; norm(v) the smallest distance from v
 * to a peripheral vertex; lambda(v) = ecc(v) - norm(v). Vertex sets are sorted
 * ascending. On a single vertex every quantity is 0 and the vertex belongs to
 * all three sets.
 */
struct InvariantProfile {
  std::vector<int> ecc;
  std::vector<int> norm;
  std::vector<int> lambda;
  std::vector<Vertex> periphery;
  std::vector<Vertex> center;
  std::vector<Vertex> normality_center;
  int diameter = 0;
  int radius = 0;
  std::int64_t ecc_sum = 0;
  std::int64_t norm_sum = 0;
  std::int64_t lambda_sum = 0;
};

namespace detail {

inline std::vector<Vertex> argwhere(const std::vector<int>& values, int target) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < values.size(); ++v)
    if (values[v] == target) out.push_back(static_cast<Vertex>(v));
  return out;
}

inline std::vector<int> eccentricities(const DistanceMatrix& d) {
  std::vector<int> ecc(d.order());
  for (std::size_t v = 0; v < d.order(); ++v) {
    auto row = d.row(static_cast<Vertex>(v));
    ecc[v] = *std::max_element(row.begin(), row.end());
  }
  return ecc;
}

}  // namespace detail

inline InvariantProfile profile(const DistanceMatrix& d) {
  const std::size_t n = d.order();
  if (n == 0) throw GraphError("profile of the empty graph is undefined");
  InvariantProfile p;
  p.ecc = detail::eccentricities(d);
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.periphery = detail::argwhere(p.ecc, p.diameter);
  p.center = detail::argwhere(p.ecc, p.radius);

  p.norm.assign(n, 0);
  p.lambda.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    int best = kUnreachable;
    for (Vertex u : p.periphery) best = std::min(best, d(static_cast<Vertex>(v), u));
    p.norm[v] = best;
    p.lambda[v] = p.ecc[v] - best;
  }
  const int max_norm = *std::max_element(p.norm.begin(), p.norm.end());
  p.normality_center = detail::argwhere(p.norm, max_norm);

  p.ecc_sum = std::accumulate(p.ecc.begin(), p.ecc.end(), std::int64_t{0});
  p.norm_sum = std::accumulate(p.norm.begin(), p.norm.end(), std::int64_t{0});
  p.lambda_sum = std::accumulate(p.lambda.begin(), p.lambda.end(), std::int64_t{0});
  return p;
}

inline InvariantProfile profile(const Graph& g) { return profile(DistanceMatrix(g)); }

// Largest distance from each vertex to a peripheral vertex. Equal to ecc on
// trees; may be smaller on graphs with cycles.
inline std::vector<int> ecc_via_periphery(const Graph& g) {
  const DistanceMatrix d(g);
  const auto ecc = detail::eccentricities(d);
  const int diameter = *std::max_element(ecc.begin(), ecc.end());
  const auto periphery = detail::argwhere(ecc, diameter);
  std::vector<int> out(g.order(), 0);
  for (std::size_t v = 0; v < g.order(); ++v)
    for (Vertex u : periphery) out[v] = std::max(out[v], d(static_cast<Vertex>(v), u));
  return out;
}

// Endpoints of one longest path found by two breadth-first sweeps.
inline Edge diametral_pair(const Graph& t) {
  auto farthest = [&](Vertex s) {
    const auto dist = bfs_distances(t, s);
    return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
  };
  const Vertex u = farthest(0);
  return {u, farthest(u)};
}

// Every eccentricity is realized at one end of a fixed diametral pair.
inline bool check_two_endpoint_property(const Graph& t) {
  if (!is_tree(t)) throw NotATree();
  const auto [u, w] = diametral_pair(t);
  const auto du = bfs_distances(t, u);
  const auto dw = bfs_distances(t, w);
  const auto ecc = detail::eccentricities(DistanceMatrix(t));
  for (std::size_t v = 0; v < t.order(); ++v)
    if (ecc[v] != std::max(du[v], dw[v])) return false;
  return true;
}

// max lambda == diameter attained exactly on the periphery, center within
// argmin lambda, and min lambda == diameter mod 2.
inline bool lambda_location_check(const InvariantProfile& p) {
  const int hi = *std::max_element(p.lambda.begin(), p.lambda.end());
  const int lo = *std::min_element(p.lambda.begin(), p.lambda.end());
  if (hi != p.diameter || detail::argwhere(p.lambda, hi) != p.periphery) return false;
  const auto argmin = detail::argwhere(p.lambda, lo);
  if (!std::includes(argmin.begin(), argmin.end(), p.center.begin(), p.center.end())) return false;
  return lo == p.diameter % 2;
}

inline bool lambda_location_check(const Graph& t) {
  if (!is_tree(t)) throw NotATree();
  return lambda_location_check(profile(t));
}

inline std::vector<Vertex> lambda_argmin(const InvariantProfile& p) {
  return detail::argwhere(p.lambda, *std::min_element(p.lambda.begin(), p.lambda.end()));
}

inline std::vector<Vertex> lambda_argmax(const InvariantProfile& p) {
  return detail::argwhere(p.lambda, *std::max_element(p.lambda.begin(), p.lambda.end()));
}

}  // namespace normality
