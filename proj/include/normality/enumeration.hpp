#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "normality/canonical.hpp"
#include "normality/errors.hpp"
#include "normality/graph.hpp"
#include "normality/invariants.hpp"

namespace normality {

inline constexpr int kMaxEnumerationOrder = 20;
inline constexpr int kMaxPruferOrder = 9;

struct TreeFilter {
  std::optional<int> diameter;
  std::optional<int> peripheral_count;

  bool accepts(const InvariantProfile& p) const {
    if (diameter && p.diameter != *diameter) return false;
    if (peripheral_count && static_cast<int>(p.periphery.size()) != *peripheral_count) return false;
    return true;
  }

  bool empty() const noexcept { return !diameter && !peripheral_count; }
};

/**
 * The non-isomorphic trees of one order, ascending by canonical code.
 *
 * Holds codes only; `tree(i)` rebuilds the representative graph. Chunks share
 * the underlying storage and are independent of each other, so they can be
 * handed to separate workers.
 */
class TreeStream {
 public:
  TreeStream(int n, TreeFilter filter, std::vector<CanonicalCode> codes)
      : n_(n),
        filter_(filter),
        codes_(std::make_shared<const std::vector<CanonicalCode>>(std::move(codes))),
        begin_(0),
        end_(codes_->size()) {}

  int order() const noexcept { return n_; }
  const TreeFilter& filter() const noexcept { return filter_; }
  std::size_t size() const noexcept { return end_ - begin_; }
  bool empty() const noexcept { return size() == 0; }

  const CanonicalCode& code(std::size_t i) const { return (*codes_)[begin_ + i]; }
  Graph tree(std::size_t i) const { return decode_tree(code(i)); }

  template <typename Fn>  // Fn(const CanonicalCode&, const Graph&)
  void for_each(Fn&& fn) const {
    for (std::size_t i = begin_; i < end_; ++i) fn((*codes_)[i], decode_tree((*codes_)[i]));
  }

  // Contiguous near-equal partition into at most `parts` non-empty chunks.
  std::vector<TreeStream> chunks(std::size_t parts) const {
    std::vector<TreeStream> out;
    parts = std::max<std::size_t>(1, std::min(parts, size()));
    const std::size_t total = size();
    for (std::size_t p = 0; p < parts; ++p) {
      TreeStream c = *this;
      c.begin_ = begin_ + total * p / parts;
      c.end_ = begin_ + total * (p + 1) / parts;
      if (c.begin_ < c.end_) out.push_back(std::move(c));
    }
    return out;
  }

 private:
  int n_;
  TreeFilter filter_;
  std::shared_ptr<const std::vector<CanonicalCode>> codes_;
  std::size_t begin_;
  std::size_t end_;
};

namespace detail {

// Every rooted tree with at most `max_size` vertices, as AHU codes sorted
// ascending, grouped by size.
class RootedCatalog {
 public:
  explicit RootedCatalog(int max_size) {
    for (int s = 1; s <= max_size; ++s) {
      std::vector<std::string> fresh;
      std::vector<std::size_t> picks;
      forests(s - 1, 0, picks, [&](const std::vector<std::size_t>& chosen) {
        std::string code = "(";
        for (std::size_t i : chosen) code += all_[i];
        code += ')';
        fresh.push_back(std::move(code));
      });
      for (auto& c : fresh) {
        all_.push_back(std::move(c));
        size_.push_back(s);
      }
      std::vector<std::size_t> idx(all_.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return all_[a] < all_[b]; });
      std::vector<std::string> sorted_codes;
      std::vector<int> sorted_sizes;
      for (std::size_t i : idx) {
        sorted_codes.push_back(std::move(all_[i]));
        sorted_sizes.push_back(size_[i]);
      }
      all_ = std::move(sorted_codes);
      size_ = std::move(sorted_sizes);
    }
  }

  const std::string& code(std::size_t i) const { return all_[i]; }
  int size_of(std::size_t i) const { return size_[i]; }
  std::size_t count() const { return all_.size(); }

  // Visits each multiset of catalog trees whose sizes total `remaining`,
  // listed as non-decreasing indices (hence children already sorted).
  template <typename Visit>
  void forests(int remaining, std::size_t from, std::vector<std::size_t>& picks, Visit&& visit,
               int size_cap = 1 << 30) const {
    if (remaining == 0) {
      visit(picks);
      return;
    }
    for (std::size_t i = from; i < all_.size(); ++i) {
      const int s = size_[i];
      if (s > remaining || s > size_cap) continue;
      picks.push_back(i);
      forests(remaining - s, i, picks, visit, size_cap);
      picks.pop_back();
    }
  }

 private:
  std::vector<std::string> all_;
  std::vector<int> size_;
};

}  // namespace detail

// Codes of every non-isomorphic tree on n vertices, ascending.
inline std::vector<CanonicalCode> free_tree_codes(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw DomainError("free_trees requires 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
  std::vector<CanonicalCode> out;
  // Unicentroidal: every branch at the root has fewer than n/2 vertices.
  const int branch_cap = (n - 1) / 2;
  const detail::RootedCatalog catalog(std::max(branch_cap, n / 2));
  std::vector<std::size_t> picks;
  catalog.forests(
      n - 1, 0, picks,
      [&](const std::vector<std::size_t>& chosen) {
        std::string code = "(";
        for (std::size_t i : chosen) code += catalog.code(i);
        code += ')';
        out.emplace_back(std::move(code));
      },
      branch_cap);
  // Bicentroidal: two rooted halves of n/2 vertices joined at their roots.
  if (n % 2 == 0) {
    std::vector<std::size_t> halves;
    for (std::size_t i = 0; i < catalog.count(); ++i)
      if (catalog.size_of(i) == n / 2) halves.push_back(i);
    for (std::size_t a = 0; a < halves.size(); ++a)
      for (std::size_t b = a; b < halves.size(); ++b)
        out.emplace_back("[" + catalog.code(halves[a]) + catalog.code(halves[b]) + "]");
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline TreeStream free_trees(int n) { return TreeStream(n, {}, free_tree_codes(n)); }

inline TreeStream free_trees_filtered(int n, std::optional<int> diameter, std::optional<int> peripheral_count) {
  TreeFilter filter{diameter, peripheral_count};
  auto codes = free_tree_codes(n);
  if (filter.empty()) return TreeStream(n, filter, std::move(codes));
  std::vector<CanonicalCode> kept;
  for (auto& c : codes) {
    const Graph t = decode_tree(c);
    // Cheap prefilter on the diameter before the full profile.
    if (diameter) {
      const auto [u, w] = diametral_pair(t);
      if (bfs_distances(t, u)[w] != *diameter) continue;
    }
    if (filter.accepts(profile(t))) kept.push_back(std::move(c));
  }
  return TreeStream(n, filter, std::move(kept));
}

// Decodes a Prüfer sequence over 0..n-1 into its labeled tree.
inline Graph prufer_decode(int n, const std::vector<int>& seq) {
  if (n < 1 || static_cast<int>(seq.size()) != std::max(0, n - 2))
    throw DomainError("Prüfer sequence must have length n-2");
  if (n == 1) return Graph(1);
  std::vector<int> degree(n, 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw DomainError("Prüfer symbol out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  for (int x : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    --degree[leaf];
    --degree[x];
  }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.push_back({u, v});
        break;
      }
    }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

// Visits all n^(n-2) labeled trees on 0..n-1 in lexicographic Prüfer order.
template <typename Visit>
void for_each_labeled_tree(int n, Visit&& visit) {
  if (n < 1 || n > kMaxPruferOrder)
    throw DomainError("labeled tree enumeration requires 1 <= n <= " + std::to_string(kMaxPruferOrder));
  std::vector<int> seq(std::max(0, n - 2), 0);
  while (true) {
    visit(prufer_decode(n, seq));
    int pos = static_cast<int>(seq.size()) - 1;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) return;
    ++seq[pos];
  }
}

inline std::vector<Graph> labeled_trees_prufer(int n) {
  std::vector<Graph> out;
  for_each_labeled_tree(n, [&](Graph g) { out.push_back(std::move(g)); });
  return out;
}

}  // namespace normality
