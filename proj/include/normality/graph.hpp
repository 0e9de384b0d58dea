#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "normality/errors.hpp"

namespace normality {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Every neighbor list is strictly increasing; adjacency is symmetric and
 * free of self-loops. The only ways to obtain a Graph are the validating
 * factory `from_edges`, the edge-list parser and `add_edge`, so these
 * invariants hold for every instance.
 */
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adjacency_(n) {}

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
      g.check_new_edge(e.u, e.v);
      g.adjacency_[e.u].push_back(e.v);
      g.adjacency_[e.v].push_back(e.u);
      ++g.edge_count_;
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool contains(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < order();
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < order(); ++u)
      for (Vertex v : adjacency_[u])
        if (static_cast<Vertex>(u) < v) out.push_back({static_cast<Vertex>(u), v});
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph add_edge(const Graph& g, Vertex u, Vertex v);

  void check_new_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v))
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") references a vertex outside 0.." +
                       std::to_string(static_cast<long long>(order()) - 1));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    const auto& nbrs = adjacency_[u];
    if (std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end())
      throw GraphError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Copy of g with the edge {u,v} added.
inline Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  g.check_new_edge(u, v);
  Graph out = g;
  auto insert_sorted = [](std::vector<Vertex>& nbrs, Vertex x) {
    nbrs.insert(std::upper_bound(nbrs.begin(), nbrs.end(), x), x);
  };
  insert_sorted(out.adjacency_[u], v);
  insert_sorted(out.adjacency_[v], u);
  ++out.edge_count_;
  return out;
}

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   # optional comment lines
//   n
//   u v
//   ...
//
// LF line endings, a single ASCII space between endpoints.
// ---------------------------------------------------------------------------

namespace detail {

inline bool parse_index(std::string_view token, long long& out) {
  if (token.empty()) return false;
  for (char c : token)
    if (c < '0' || c > '9') return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  long long n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen;

  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (!line.empty() && line.front() == '#') continue;

    if (!have_header) {
      if (!detail::parse_index(line, n) || n < 1)
        throw ParseError(line_no, "expected a positive vertex count, got '" + std::string(line) + "'");
      if (n > std::numeric_limits<Vertex>::max())
        throw ParseError(line_no, "vertex count too large");
      have_header = true;
      seen.resize(static_cast<std::size_t>(n));
      continue;
    }

    const std::size_t space = line.find(' ');
    long long u = 0;
    long long v = 0;
    if (space == std::string_view::npos || !detail::parse_index(line.substr(0, space), u) ||
        !detail::parse_index(line.substr(space + 1), v))
      throw ParseError(line_no, "malformed edge line '" + std::string(line) + "'");
    if (u >= n || v >= n)
      throw ParseError(line_no, "vertex index out of range (n = " + std::to_string(n) + ")");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    auto& su = seen[static_cast<std::size_t>(u)];
    if (std::find(su.begin(), su.end(), static_cast<Vertex>(v)) != su.end())
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    su.push_back(static_cast<Vertex>(v));
    seen[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(u));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_header) throw ParseError(line_no, "missing vertex count");
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

inline Graph parse_edge_list(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

inline std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Hop distances from source; unreachable vertices get kUnreachable.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source))
    throw GraphError("source vertex " + std::to_string(source) + " out of range");
  std::vector<int> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

// All-pairs hop distances of a connected graph, stored row-major.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g) : n_(g.order()), d_(n_ * n_) {
    for (std::size_t s = 0; s < n_; ++s) {
      auto row = bfs_distances(g, static_cast<Vertex>(s));
      if (std::find(row.begin(), row.end(), kUnreachable) != row.end()) throw DisconnectedGraph();
      std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
  }

  std::size_t order() const noexcept { return n_; }

  int operator()(Vertex u, Vertex v) const noexcept {
    return d_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  }

  std::span<const int> row(Vertex u) const noexcept {
    return {d_.data() + static_cast<std::size_t>(u) * n_, n_};
  }

  int max_entry() const noexcept { return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end()); }

 private:
  std::size_t n_;
  std::vector<int> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

}  // namespace normality
