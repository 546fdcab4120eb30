#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gridlike/error.hpp"

namespace gridlike {

using Vertex = std::int32_t;
/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;
/// Undirected edge stored with the smaller endpoint first.
using Edge = std::pair<Vertex, Vertex>;

inline VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

/// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n) : n_(checked_count(n)), adj_(static_cast<std::size_t>(n)) {}

  /// Throws InputError on self-loops, duplicates (in either orientation) and
  /// out-of-range endpoints.
  Graph(Vertex n, std::span<const Edge> edges) : Graph(n) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for n=" + std::to_string(n));
      }
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw InputError("duplicate edge (" + std::to_string(dup->first) + "," +
                       std::to_string(dup->second) + ")");
    }
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  Graph(Vertex n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  Vertex n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  bool has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static Vertex checked_count(Vertex n) {
    if (n < 0) throw InputError("negative vertex count");
    return n;
  }

  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Throws InputError if any vertex of `vs` is not a vertex of `g`.
inline void require_in_range(const Graph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    if (!g.contains(v)) {
      throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(g.n()));
    }
  }
}

inline bool sets_intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

/// Two vertex sets touch if they share a vertex or some edge joins them.
inline bool sets_touch(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  if (sets_intersect(a, b)) return true;
  for (Vertex u : a) {
    for (Vertex w : g.neighbors(u)) {
      if (std::binary_search(b.begin(), b.end(), w)) return true;
    }
  }
  return false;
}

/// True iff `vs` is non-empty and induces a connected subgraph.
inline bool is_connected_subset(const Graph& g, std::span<const Vertex> vs) {
  if (vs.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0), seen(in.size(), 0);
  for (Vertex v : vs) in[v] = 1;
  std::vector<Vertex> stack{vs.front()};
  seen[vs.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  std::size_t distinct = 0;
  for (char c : in) distinct += c;
  return reached == distinct;
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  VertexSet all(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  return is_connected_subset(g, all);
}

/// Subgraph induced by `vs`, relabelled so that vs[i] becomes vertex i.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  std::vector<Vertex> index(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  return Graph(static_cast<Vertex>(vs.size()), edges);
}

struct Degeneracy {
  int value = 0;
  /// Removal order: each vertex has minimum degree among those remaining.
  std::vector<Vertex> ordering;
  /// Vertices still present when the maximum degree-at-removal was first
  /// reached; their induced subgraph has minimum degree `value`.
  VertexSet core;
};

/// Smallest d such that every subgraph has a vertex of degree <= d.
/// Ties in the removal order go to the smallest vertex index.
inline Degeneracy degeneracy(const Graph& g) {
  Degeneracy out;
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> deg(n);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < g.n(); ++v) {
    deg[v] = static_cast<int>(g.degree(v));
    queue.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  std::size_t core_start = 0;
  out.ordering.reserve(n);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    if (d > out.value || out.ordering.empty()) {
      out.value = std::max(out.value, d);
      core_start = out.ordering.size();
    }
    out.ordering.push_back(v);
    removed[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  out.core = make_vertex_set({out.ordering.begin() + static_cast<std::ptrdiff_t>(core_start),
                              out.ordering.end()});
  return out;
}

struct Bipartition {
  VertexSet side_a;
  VertexSet side_b;
};

/// BFS 2-colouring; each component's smallest vertex goes to side A.
/// Returns nullopt when an odd cycle exists.
inline std::optional<Bipartition> is_bipartite(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.n()), -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (Vertex v = 0; v < g.n(); ++v) (colour[v] == 0 ? out.side_a : out.side_b).push_back(v);
  return out;
}

/// First-fit colouring in index order. Returns one colour per vertex.
inline std::vector<int> greedy_colouring(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.n()), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    std::vector<char> used(g.degree(v) + 1, 0);
    for (Vertex w : g.neighbors(v)) {
      if (colour[w] >= 0 && static_cast<std::size_t>(colour[w]) < used.size()) used[colour[w]] = 1;
    }
    int c = 0;
    while (used[c]) ++c;
    colour[v] = c;
  }
  return colour;
}

}  // namespace gridlike
