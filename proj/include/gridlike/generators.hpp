#pragma once

#include <vector>

#include "gridlike/graph.hpp"
#include "gridlike/random.hpp"

namespace gridlike {

inline Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

inline Graph cycle_graph(Vertex n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

/// Sides are 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(Vertex a, Vertex b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

/// rows x cols grid; vertex (r, c) has index r * cols + c.
inline Graph grid_graph(Vertex rows, Vertex cols) {
  std::vector<Edge> edges;
  for (Vertex r = 0; r < rows; ++r) {
    for (Vertex c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph(rows * cols, edges);
}

inline Graph grid_graph(Vertex side) { return grid_graph(side, side); }

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph(10, edges);
}

/// Erdos-Renyi G(n, p).
inline Graph random_graph(Vertex n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (bernoulli(rng, p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Random spanning tree (each vertex attaches to a uniformly chosen earlier
/// one) plus G(n, p) extra edges. Always connected.
inline Graph random_connected_graph(Vertex n, double p, Rng& rng) {
  std::vector<Edge> edges;
  std::vector<std::vector<char>> present(static_cast<std::size_t>(n),
                                         std::vector<char>(static_cast<std::size_t>(n), 0));
  for (Vertex v = 1; v < n; ++v) {
    const auto u = static_cast<Vertex>(uniform_index(rng, static_cast<std::uint64_t>(v)));
    edges.emplace_back(u, v);
    present[u][v] = 1;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!present[u][v] && bernoulli(rng, p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace gridlike
