#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "normality/errors.hpp"
#include "normality/graph.hpp"

namespace normality {

/**
 * Isomorphism-invariant encoding of a free tree.
 *
 * Alphabet: '(' and ')' delimit a rooted subtree whose children appear in
 * ascending code order. A tree with one centroid is encoded rooted at that
 * centroid. A tree with two centroids is encoded as '[' A B ']' where A <= B
 * are the two halves rooted at their centroids; the brackets keep bicentroidal
 * codes disjoint from unicentroidal ones regardless of order.
 */
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string code) : code_(std::move(code)) {}

  const std::string& str() const noexcept { return code_; }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string code_;
};

namespace detail {

// AHU encoding of the subtree hanging from `root` away from `blocked`.
// `marked` (if >= 0) is encoded with '{' '}' instead of '(' ')'.
inline std::string encode_rooted(const Graph& t, Vertex root, Vertex blocked, Vertex marked = -1) {
  // Iterative post-order so deep paths do not exhaust the stack.
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    std::vector<std::string> children;
  };
  std::vector<Frame> stack;
  stack.push_back({root, blocked, 0, {}});
  std::string result;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto nbrs = t.neighbors(top.v);
    if (top.next < nbrs.size()) {
      const Vertex w = nbrs[top.next++];
      if (w != top.parent) stack.push_back({w, top.v, 0, {}});
      continue;
    }
    std::sort(top.children.begin(), top.children.end());
    const bool mark = top.v == marked;
    std::string code(1, mark ? '{' : '(');
    for (const auto& c : top.children) code += c;
    code += mark ? '}' : ')';
    stack.pop_back();
    if (stack.empty())
      result = std::move(code);
    else
      stack.back().children.push_back(std::move(code));
  }
  return result;
}

}  // namespace detail

// One or two centroids of a tree, ascending.
inline std::vector<Vertex> centroids(const Graph& t) {
  if (!is_tree(t)) throw NotATree();
  const std::size_t n = t.order();
  std::vector<Vertex> order;
  std::vector<Vertex> parent(n, -1);
  order.reserve(n);
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : t.neighbors(order[i]))
      if (w != parent[order[i]]) {
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<std::size_t> sub(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];

  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t largest = n - sub[v];
    for (Vertex w : t.neighbors(static_cast<Vertex>(v)))
      if (w != parent[v]) largest = std::max(largest, sub[w]);
    if (2 * largest <= n) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

inline CanonicalCode canonical_code(const Graph& t) {
  const auto c = centroids(t);
  if (c.size() == 1) return CanonicalCode(detail::encode_rooted(t, c[0], -1));
  std::string a = detail::encode_rooted(t, c[0], c[1]);
  std::string b = detail::encode_rooted(t, c[1], c[0]);
  if (b < a) std::swap(a, b);
  return CanonicalCode("[" + a + b + "]");
}

// Code of a tree rooted at `root` with one distinguished vertex. Two
// (tree, root, marked) triples share a code iff some isomorphism maps one
// onto the other.
inline std::string rooted_marked_code(const Graph& t, Vertex root, Vertex marked) {
  if (!is_tree(t)) throw NotATree();
  return detail::encode_rooted(t, root, -1, marked);
}

// Orbit key of the unordered vertex pair {u,v} under the automorphisms of t.
inline std::string pair_orbit_key(const Graph& t, Vertex u, Vertex v) {
  return std::min(rooted_marked_code(t, u, v), rooted_marked_code(t, v, u));
}

// Rebuilds a representative tree from a code; vertices are numbered in
// pre-order of the encoding, so the result is deterministic.
inline Graph decode_tree(const CanonicalCode& code) {
  const std::string& s = code.str();
  std::vector<Edge> edges;
  std::vector<Vertex> open;
  std::vector<Vertex> top_level;
  Vertex next = 0;
  for (char ch : s) {
    switch (ch) {
      case '(':
      case '{':
        if (!open.empty())
          edges.push_back({open.back(), next});
        else
          top_level.push_back(next);
        open.push_back(next++);
        break;
      case ')':
      case '}':
        if (open.empty()) throw GraphError("unbalanced canonical code");
        open.pop_back();
        break;
      case '[':
      case ']':
        break;
      default:
        throw GraphError(std::string("invalid canonical code symbol '") + ch + "'");
    }
  }
  if (!open.empty() || top_level.empty()) throw GraphError("unbalanced canonical code");
  if (top_level.size() == 2)
    edges.push_back({top_level[0], top_level[1]});
  else if (top_level.size() != 1)
    throw GraphError("canonical code has more than two top-level subtrees");
  return Graph::from_edges(static_cast<std::size_t>(next), edges);
}

}  // namespace normality

template <>
struct std::hash<normality::CanonicalCode> {
  std::size_t operator()(const normality::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.str());
  }
};
