#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridlike/generators.hpp"
#include "gridlike/graph.hpp"

namespace gridlike {

struct BrambleCheck {
  bool ok = true;
  std::string reason;
  /// Offending element indices: one for a disconnected element, two for a
  /// non-touching pair.
  std::vector<std::size_t> witness;
  explicit operator bool() const { return ok; }
};

/// Checks that every element is non-empty and connected and that every pair
/// of elements touches. Throws InputError on out-of-range vertices.
inline BrambleCheck check_bramble(const Graph& g, const std::vector<VertexSet>& elements) {
  for (const auto& x : elements) require_in_range(g, x);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!is_connected_subset(g, make_vertex_set(elements[i]))) {
      return {false, "element " + std::to_string(i) + " is empty or disconnected", {i}};
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto a = make_vertex_set(elements[i]);
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!sets_touch(g, a, make_vertex_set(elements[j]))) {
        return {false, "elements " + std::to_string(i) + " and " + std::to_string(j) + " do not touch", {i, j}};
      }
    }
  }
  return {};
}

inline bool is_bramble(const Graph& g, const std::vector<VertexSet>& elements) {
  return static_cast<bool>(check_bramble(g, elements));
}

/// Pairwise touching connected vertex sets of a host graph. Elements are
/// stored sorted; duplicate elements are rejected.
class Bramble {
 public:
  Bramble(Graph host, std::vector<VertexSet> elements) : host_(std::move(host)), elements_(std::move(elements)) {
    for (auto& x : elements_) x = make_vertex_set(std::move(x));
    auto sorted = elements_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("duplicate bramble element");
    }
    if (auto check = check_bramble(host_, elements_); !check) throw InputError("not a bramble: " + check.reason);
  }

  const Graph& host() const { return host_; }
  const std::vector<VertexSet>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  /// Any subfamily of a bramble is a bramble.
  Bramble subfamily(const std::vector<std::size_t>& indices) const {
    Bramble out;
    out.host_ = host_;
    for (std::size_t i : indices) out.elements_.push_back(elements_.at(i));
    return out;
  }

 private:
  Bramble() = default;
  Graph host_;
  std::vector<VertexSet> elements_;
};

/// Result of a minimum hitting set computation.
struct OrderCertificate {
  int order = 0;
  VertexSet hitting_set;
  /// Set when the search was exhaustive: no smaller hitting set exists.
  bool exhaustive = false;
  /// Disjoint-packing lower bound; equals `order` when exhaustive.
  int lower_bound = 0;
};

inline bool hits_all(const std::vector<VertexSet>& elements, std::span<const Vertex> hitting_set) {
  const VertexSet s = make_vertex_set({hitting_set.begin(), hitting_set.end()});
  return std::all_of(elements.begin(), elements.end(), [&](const VertexSet& x) { return sets_intersect(x, s); });
}

namespace detail {

class HittingSetSearch {
 public:
  explicit HittingSetSearch(std::vector<std::uint64_t> elements) : elements_(std::move(elements)) {}

  static std::uint64_t greedy(const std::vector<std::uint64_t>& elements) {
    std::uint64_t chosen = 0;
    for (;;) {
      std::vector<int> count(64, 0);
      bool any = false;
      for (std::uint64_t x : elements) {
        if (x & chosen) continue;
        any = true;
        for (std::uint64_t m = x; m; m &= m - 1) ++count[std::countr_zero(m)];
      }
      if (!any) return chosen;
      const auto best = std::max_element(count.begin(), count.end()) - count.begin();
      chosen |= std::uint64_t{1} << best;
    }
  }

  /// Greedy maximal family of pairwise disjoint elements among those not hit
  /// by `chosen`, smallest first. Its size bounds the extra vertices needed.
  static int packing(const std::vector<std::uint64_t>& elements, std::uint64_t chosen, std::uint64_t banned) {
    std::vector<std::uint64_t> open;
    for (std::uint64_t x : elements)
      if (!(x & chosen)) open.push_back(x & ~banned);
    std::sort(open.begin(), open.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    std::uint64_t covered = 0;
    int count = 0;
    for (std::uint64_t x : open) {
      if (!(x & covered)) {
        covered |= x;
        ++count;
      }
    }
    return count;
  }

  std::uint64_t solve() {
    best_ = greedy(elements_);
    best_size_ = std::popcount(best_);
    branch(0, 0);
    return best_;
  }

 private:
  void branch(std::uint64_t chosen, std::uint64_t banned) {
    const int size = std::popcount(chosen);
    if (size + packing(elements_, chosen, banned) >= best_size_) return;
    // Branch on the open element with the fewest usable vertices.
    std::uint64_t pivot = 0;
    int pivot_size = std::numeric_limits<int>::max();
    for (std::uint64_t x : elements_) {
      if (x & chosen) continue;
      const std::uint64_t usable = x & ~banned;
      if (!usable) return;
      if (std::popcount(usable) < pivot_size) {
        pivot = usable;
        pivot_size = std::popcount(usable);
      }
    }
    if (pivot_size == std::numeric_limits<int>::max()) {
      best_ = chosen;
      best_size_ = size;
      return;
    }
    for (std::uint64_t m = pivot; m; m &= m - 1) {
      const std::uint64_t v = m & (~m + 1);
      branch(chosen | v, banned);
      banned |= v;
    }
  }

  std::vector<std::uint64_t> elements_;
  std::uint64_t best_ = 0;
  int best_size_ = 0;
};

}  // namespace detail

inline constexpr std::size_t kDefaultExactLimit = 64;

/// Order of a family of vertex sets: the size of a minimum hitting set.
/// Exhaustive branch and bound when the sets span at most min(exact_limit, 64)
/// distinct vertices; otherwise a greedy upper bound and a packing lower bound.
inline OrderCertificate minimum_hitting_set(const std::vector<VertexSet>& elements,
                                            std::size_t exact_limit = kDefaultExactLimit) {
  OrderCertificate out;
  if (elements.empty()) {
    out.exhaustive = true;
    return out;
  }
  std::vector<Vertex> support;
  for (const auto& x : elements) support.insert(support.end(), x.begin(), x.end());
  support = make_vertex_set(std::move(support));
  if (std::any_of(elements.begin(), elements.end(), [](const VertexSet& x) { return x.empty(); })) {
    throw InputError("an empty set cannot be hit");
  }

  if (support.size() <= std::min<std::size_t>(exact_limit, 64)) {
    std::vector<std::uint64_t> masks;
    for (const auto& x : elements) {
      std::uint64_t m = 0;
      for (Vertex v : x) {
        m |= std::uint64_t{1} << (std::lower_bound(support.begin(), support.end(), v) - support.begin());
      }
      masks.push_back(m);
    }
    std::uint64_t best = detail::HittingSetSearch(masks).solve();
    for (; best; best &= best - 1) out.hitting_set.push_back(support[std::countr_zero(best)]);
    out.order = static_cast<int>(out.hitting_set.size());
    out.lower_bound = out.order;
    out.exhaustive = true;
  } else {
    // Greedy over the full support; packing for the lower bound.
    std::vector<char> hit(elements.size(), 0);
    std::size_t open = elements.size();
    while (open > 0) {
      Vertex best = -1;
      std::size_t best_count = 0;
      for (Vertex v : support) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < elements.size(); ++i) {
          if (!hit[i] && std::binary_search(elements[i].begin(), elements[i].end(), v)) ++count;
        }
        if (count > best_count) {
          best = v;
          best_count = count;
        }
      }
      out.hitting_set.push_back(best);
      for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!hit[i] && std::binary_search(elements[i].begin(), elements[i].end(), best)) {
          hit[i] = 1;
          --open;
        }
      }
    }
    out.hitting_set = make_vertex_set(std::move(out.hitting_set));
    out.order = static_cast<int>(out.hitting_set.size());
    auto sorted = elements;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<char> covered(static_cast<std::size_t>(support.back()) + 1, 0);
    for (const auto& x : sorted) {
      if (std::none_of(x.begin(), x.end(), [&](Vertex v) { return covered[v] != 0; })) {
        for (Vertex v : x) covered[v] = 1;
        ++out.lower_bound;
      }
    }
  }
  if (!hits_all(elements, out.hitting_set)) throw InternalError("hitting set misses an element");
  return out;
}

inline OrderCertificate bramble_order(const Bramble& b, std::size_t exact_limit = kDefaultExactLimit) {
  return minimum_hitting_set(b.elements(), exact_limit);
}

/// Crosses (row r together with column c) of the l x l grid, in row-major
/// order of (r, c). Vertex (r, c) is r * l + c.
inline Bramble crosses_bramble(Vertex l) {
  if (l < 1) throw PreconditionError("crosses_bramble needs l >= 1");
  std::vector<VertexSet> elements;
  for (Vertex r = 0; r < l; ++r) {
    for (Vertex c = 0; c < l; ++c) {
      std::vector<Vertex> cross;
      for (Vertex i = 0; i < l; ++i) {
        cross.push_back(r * l + i);
        cross.push_back(i * l + c);
      }
      elements.push_back(make_vertex_set(std::move(cross)));
    }
  }
  return Bramble(grid_graph(l), std::move(elements));
}

inline constexpr Vertex kTreewidthLimit = 20;

/// Exact treewidth by dynamic programming over vertex subsets: the best
/// elimination order minimises the largest set of uneliminated vertices
/// reachable from an eliminated vertex through earlier-eliminated ones.
/// The empty graph has treewidth -1.
inline int treewidth_exact(const Graph& g) {
  const Vertex n = g.n();
  if (n > kTreewidthLimit) {
    throw LimitError("treewidth_exact supports at most " + std::to_string(kTreewidthLimit) + " vertices");
  }
  if (n == 0) return -1;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  // Vertices outside `eliminated` (and other than v) adjacent to v's
  // component in G[eliminated + v].
  const auto q_size = [&](std::uint32_t eliminated, int v) {
    std::uint32_t reach = 1u << v;
    std::uint32_t frontier = reach;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)];
      next &= eliminated & ~reach;
      reach |= next;
      frontier = next;
    }
    std::uint32_t boundary = 0;
    for (std::uint32_t m = reach; m; m &= m - 1) boundary |= adj[std::countr_zero(m)];
    boundary &= full & ~eliminated & ~(1u << v);
    return std::popcount(boundary);
  };
  std::vector<std::int8_t> best(std::size_t{1} << n, std::numeric_limits<std::int8_t>::max());
  best[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::int8_t value = std::numeric_limits<std::int8_t>::max();
    for (std::uint32_t m = s; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const std::uint32_t before = s & ~(1u << v);
      const auto width = static_cast<std::int8_t>(std::max<int>(best[before], q_size(before, v)));
      value = std::min(value, width);
    }
    best[s] = value;
    if (s == full) break;
  }
  return best[full];
}

}  // namespace gridlike
