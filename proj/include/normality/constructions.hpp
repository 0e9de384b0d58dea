#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normality/errors.hpp"
#include "normality/graph.hpp"

// Generators for the named tree families and figure fixtures.
//
// Vertex numbering is fixed per family: the main path first (in path
// order), then the spine of any attached comet, then pendant vertices. The
// serialized edge lists are therefore reproducible byte for byte.

namespace normality {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

class TreeBuilder {
 public:
  Vertex add_vertex() { return next_++; }

  Vertex attach(Vertex parent) {
    const Vertex v = next_++;
    edges_.push_back({parent, v});
    return v;
  }

  // Path of `count` new vertices hanging from `parent` (or free when parent < 0).
  Vertex add_path(Vertex parent, int count) {
    Vertex last = parent;
    for (int i = 0; i < count; ++i) last = last < 0 ? add_vertex() : attach(last);
    return last;
  }

  void add_pendants(Vertex at, int count) {
    for (int i = 0; i < count; ++i) attach(at);
  }

  // Identifies the head of an r-comet on `size` vertices with `head`.
  // r <= 0 degenerates to size-1 pendants at the head.
  void add_comet(Vertex head, int size, int r) {
    if (size <= 1) return;
    if (r <= 0) {
      add_pendants(head, size - 1);
      return;
    }
    const Vertex tail = add_path(head, r - 1);
    add_pendants(tail, size - r);
  }

  Graph build() const { return Graph::from_edges(static_cast<std::size_t>(next_), edges_); }

 private:
  Vertex next_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace detail

inline Graph path(int n) {
  detail::require(n >= 1, "path requires n >= 1");
  detail::TreeBuilder b;
  b.add_path(-1, n);
  return b.build();
}

// Center is vertex 0.
inline Graph star(int n) {
  detail::require(n >= 2, "star requires n >= 2");
  detail::TreeBuilder b;
  b.add_pendants(b.add_vertex(), n - 1);
  return b.build();
}

// Path 0..r-1 with head 0 and n-r pendants at r-1.
inline Graph comet(int n, int r) {
  detail::require(r >= 1 && r <= n - 1, "comet requires 1 <= r <= n-1");
  detail::TreeBuilder b;
  b.add_pendants(b.add_path(-1, r), n - r);
  return b.build();
}

// Path 0..L-1 (L = n-a-b) with a pendants at 0 and b pendants at L-1.
inline Graph dumbbell(int n, int a, int b) {
  detail::require(a >= 1 && b >= 1 && n - a - b >= 1, "dumbbell requires a,b >= 1 and n-a-b >= 1");
  detail::TreeBuilder tb;
  const Vertex last = tb.add_path(-1, n - a - b);
  tb.add_pendants(0, a);
  tb.add_pendants(last, b);
  return tb.build();
}

enum class Midpoint { floor, ceil };

inline int comet_length_t_hat(int n, int d) { return std::min(d / 2 - 1, n - d - 1); }

// True when the attached comet degenerates to pendants at the midpoint
// (d in {2,3} with at least one vertex off the path).
inline bool t_hat_uses_degenerate_comet(int n, int d) { return n - d > 1 && d / 2 - 1 <= 0; }

/**
 * T̂(n,d): path v0..vd (vertices 0..d) with the head of an r-comet on n-d
 * vertices identified with the middle vertex, r = min(floor(d/2)-1, n-d-1).
 * For odd d the midpoint defaults to v_floor(d/2).
 */
inline Graph t_hat(int n, int d, Midpoint mid = Midpoint::floor) {
  detail::require(d >= 2 && d <= n - 1, "t_hat requires 2 <= d <= n-1");
  detail::TreeBuilder b;
  b.add_path(-1, d + 1);
  const Vertex middle = mid == Midpoint::floor ? d / 2 : (d + 1) / 2;
  b.add_comet(middle, n - d, comet_length_t_hat(n, d));
  return b.build();
}

/**
 * T̃(n,k,d) from the dumbbell D(k+d-1,a,b) with a comet at the middle.
 *
 * Layout: v0..vd are vertices 0..d (v0 is one of the a pendants, vd one of
 * the b pendants), then a-1 further pendants at v1, b-1 at v(d-1), then the
 * comet on n-k-d+2 vertices with r = min(floor(d/2)-1, n-k-d+1). With k = 2
 * this is exactly t_hat(n,d).
 */
inline Graph t_tilde(int n, int k, int d, int a, int b, Midpoint mid = Midpoint::floor) {
  detail::require(k >= 2 && a >= 1 && b >= 1 && a + b == k, "t_tilde requires k >= 2, a,b >= 1, a+b = k");
  detail::require(d >= 3 && n >= k + d - 1, "t_tilde requires d >= 3 and n >= k+d-1");
  // Diameter-3 trees are double stars whose leaves are all peripheral.
  detail::require(d > 3 || n == k + 2, "t_tilde with d = 3 requires n = k+2");
  detail::TreeBuilder tb;
  tb.add_path(-1, d + 1);
  tb.add_pendants(1, a - 1);
  tb.add_pendants(d - 1, b - 1);
  const Vertex middle = mid == Midpoint::floor ? d / 2 : (d + 1) / 2;
  tb.add_comet(middle, n - k - d + 2, std::min(d / 2 - 1, n - k - d + 1));
  return tb.build();
}

// k paths of L edges sharing endpoint 0; branch i occupies 1+iL .. (i+1)L.
inline Graph balanced_starlike(int k, int L) {
  detail::require(k >= 2 && L >= 1, "balanced_starlike requires k >= 2 and L >= 1");
  detail::TreeBuilder b;
  const Vertex hub = b.add_vertex();
  for (int i = 0; i < k; ++i) b.add_path(hub, L);
  return b.build();
}

// Balanced starlike tree with branches of length 3 plus n-3k-1 pendants at
// vertex 1 (the hub's neighbour on branch 0, which has normality 2).
inline Graph s_tilde(int n, int k) {
  detail::require(k >= 2 && n >= 3 * k + 1, "s_tilde requires k >= 2 and n >= 3k+1");
  detail::TreeBuilder b;
  const Vertex hub = b.add_vertex();
  for (int i = 0; i < k; ++i) b.add_path(hub, 3);
  b.add_pendants(1, n - 3 * k - 1);
  return b.build();
}

// Path 0..4 with n-5 pendants at vertex 2.
inline Graph s_hat(int n) {
  detail::require(n >= 5, "s_hat requires n >= 5");
  detail::TreeBuilder b;
  b.add_path(-1, 5);
  b.add_pendants(2, n - 5);
  return b.build();
}

// Path v0..vd with n-d-1 pendants split between the two middle vertices:
// `at_floor` of them at v_floor(d/2), the rest at v_ceil(d/2). For even d
// both middles coincide.
inline Graph middle_pendants(int n, int d, int at_floor) {
  detail::require(d >= 2 && d <= n - 1, "middle_pendants requires 2 <= d <= n-1");
  detail::require(at_floor >= 0 && at_floor <= n - d - 1, "middle_pendants split out of range");
  detail::TreeBuilder b;
  b.add_path(-1, d + 1);
  b.add_pendants(d / 2, at_floor);
  b.add_pendants((d + 1) / 2, n - d - 1 - at_floor);
  return b.build();
}

// ---------------------------------------------------------------------------
// Figure fixtures. Labels v1, v2, ... map to vertices 0, 1, ...
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& fixture_ids() {
  static const std::vector<std::string> ids{"fig1", "fig2_tree", "fig2_plus_edge", "fig3"};
  return ids;
}

inline Graph fixture(std::string_view id) {
  if (id == "fig1")
    // 7 vertices; v3 has eccentricity 3 but is at distance 2 from both
    // peripheral vertices v1, v5.
    return Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 6}, {6, 4}});
  if (id == "fig2_tree")
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  if (id == "fig2_plus_edge")
    return add_edge(fixture("fig2_tree"), 0, 4);
  if (id == "fig3")
    // Spine 10 - v9 - v10 - 11 where 10 carries v1,v2, v9 carries v5,v6,
    // v10 carries v7,v8 and 11 carries v3,v4. Vertices 10 and 11 are
    // unlabeled in the figure.
    return Graph::from_edges(12, {{10, 8}, {8, 9}, {9, 11},
                                  {10, 0}, {10, 1},
                                  {8, 4}, {8, 5},
                                  {9, 6}, {9, 7},
                                  {11, 2}, {11, 3}});
  throw DomainError("unknown fixture '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// Name-driven construction (CLI)
// ---------------------------------------------------------------------------

enum class Family {
  path,
  star,
  comet,
  dumbbell,
  balanced_starlike,
  t_hat,
  t_tilde,
  s_tilde,
  s_hat,
  fixture
};

inline const std::map<std::string, Family>& family_names() {
  static const std::map<std::string, Family> names{
      {"path", Family::path},         {"star", Family::star},
      {"comet", Family::comet},       {"dumbbell", Family::dumbbell},
      {"balanced_starlike", Family::balanced_starlike},
      {"t_hat", Family::t_hat},       {"t_tilde", Family::t_tilde},
      {"s_tilde", Family::s_tilde},   {"s_hat", Family::s_hat},
      {"fixture", Family::fixture}};
  return names;
}

inline std::optional<Family> parse_family(std::string_view name) {
  const auto& names = family_names();
  const auto it = names.find(std::string(name));
  if (it == names.end()) return std::nullopt;
  return it->second;
}

struct FamilySpec {
  Family family = Family::path;
  std::map<std::string, int> parameters;
  std::string fixture_id;

  int param(const std::string& name) const {
    const auto it = parameters.find(name);
    if (it == parameters.end()) throw DomainError("missing parameter --" + name);
    return it->second;
  }
};

inline Graph build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path: return path(spec.param("n"));
    case Family::star: return star(spec.param("n"));
    case Family::comet: return comet(spec.param("n"), spec.param("r"));
    case Family::dumbbell: return dumbbell(spec.param("n"), spec.param("a"), spec.param("b"));
    case Family::balanced_starlike:
      // L defaults to 3, the length used by s_tilde.
      return balanced_starlike(spec.param("k"),
                               spec.parameters.count("r") ? spec.param("r") : 3);
    case Family::t_hat: return t_hat(spec.param("n"), spec.param("d"));
    case Family::t_tilde: {
      const int k = spec.param("k");
      const int a = spec.parameters.count("a") ? spec.param("a") : 1;
      const int b = spec.parameters.count("b") ? spec.param("b") : k - a;
      return t_tilde(spec.param("n"), k, spec.param("d"), a, b);
    }
    case Family::s_tilde: return s_tilde(spec.param("n"), spec.param("k"));
    case Family::s_hat: return s_hat(spec.param("n"));
    case Family::fixture: return fixture(spec.fixture_id);
  }
  throw DomainError("unknown family");
}

}  // namespace normality
