#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridlike/generators.hpp"
#include "gridlike/graph.hpp"
#include "gridlike/grid_like_minor.hpp"
#include "gridlike/minor.hpp"

namespace gridlike {

/// G x K_q: q copies of G, copy c vertex v at index c * n + v, with the
/// copies of each vertex pairwise adjacent.
inline Graph cartesian_kq(const Graph& g, int q) {
  if (q < 1) throw PreconditionError("cartesian_kq needs q >= 1");
  const Vertex n = g.n();
  std::vector<Edge> edges;
  for (int c = 0; c < q; ++c)
    for (auto [u, v] : g.edges()) edges.emplace_back(c * n + u, c * n + v);
  for (Vertex v = 0; v < n; ++v)
    for (int c = 0; c < q; ++c)
      for (int e = c + 1; e < q; ++e) edges.emplace_back(c * n + v, e * n + v);
  return Graph(q * n, edges);
}

inline Graph cartesian_k2(const Graph& g) { return cartesian_kq(g, 2); }

class ImproperColouring : public PreconditionError {
 public:
  ImproperColouring(const std::string& what, Edge witness) : PreconditionError(what), witness_(witness) {}
  Edge witness() const { return witness_; }

 private:
  Edge witness_;
};

/// Model of the intersection graph H of `subgraphs` (connected vertex sets of
/// g) in g x K_q: subgraph s goes to copy colour[s]. Intersecting subgraphs
/// sit in different copies and are joined by the edge between the copies of
/// a shared vertex. Without a colouring, a greedy colouring of H is used.
inline MinorModel intersection_minor_in_kq_product(const Graph& g, const std::vector<VertexSet>& subgraphs,
                                                   std::optional<std::vector<int>> colouring = std::nullopt) {
  std::vector<VertexSet> sets;
  for (std::size_t s = 0; s < subgraphs.size(); ++s) {
    sets.push_back(make_vertex_set(subgraphs[s]));
    require_in_range(g, sets.back());
    if (!is_connected_subset(g, sets.back())) {
      throw PreconditionError("subgraph " + std::to_string(s) + " is empty or disconnected");
    }
  }
  std::vector<Edge> h_edges;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets_intersect(sets[i], sets[j])) h_edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  const Graph h(static_cast<Vertex>(sets.size()), h_edges);

  std::vector<int> colour = colouring ? *colouring : greedy_colouring(h);
  if (colour.size() != sets.size()) throw PreconditionError("colouring size does not match the subgraph count");
  int q = 1;
  for (int c : colour) {
    if (c < 0) throw PreconditionError("negative colour");
    q = std::max(q, c + 1);
  }
  for (auto [u, v] : h.edges()) {
    if (colour[u] == colour[v]) {
      throw ImproperColouring("subgraphs " + std::to_string(u) + " and " + std::to_string(v) +
                                  " intersect but share colour " + std::to_string(colour[u]),
                              Edge{u, v});
    }
  }
  MinorModel model{h, cartesian_kq(g, q), {}};
  for (std::size_t s = 0; s < sets.size(); ++s) {
    VertexSet bs;
    for (Vertex v : sets[s]) bs.push_back(colour[s] * g.n() + v);
    model.branch_sets.push_back(std::move(bs));
  }
  if (auto check = check_minor_model(model); !check) throw InternalError("product model invalid: " + check.detail);
  return model;
}

/// Model of the GLM's intersection graph in G x K_2: side-A paths contracted
/// in copy 0, side-B paths in copy 1.
inline MinorModel product_minor_model(const Graph& g, const GridLikeMinor& glm) {
  if (!(g == glm.host)) throw PreconditionError("graph does not match the grid-like-minor host");
  if (auto v = check_glm(glm); !v) throw PreconditionError("invalid grid-like-minor: " + v.reason);
  std::vector<VertexSet> subgraphs;
  for (const Path& p : glm.paths) subgraphs.push_back(make_vertex_set(p));
  std::vector<int> colour(glm.paths.size(), 0);
  for (int p : glm.side_b) colour[p] = 1;
  MinorModel model = intersection_minor_in_kq_product(g, subgraphs, colour);
  if (model.host.n() != 2 * g.n()) model.host = cartesian_k2(g);  // no side-B paths: still report G x K_2
  return model;
}

/// K_l model in G x K_2 from a grid-like-minor of order l: each branch set is
/// the union of the product branch sets of its paths.
inline MinorModel product_complete_minor(const Graph& g, const GridLikeMinor& glm) {
  const MinorModel inner = product_minor_model(g, glm);
  MinorModel model{complete_graph(glm.order), inner.host, {}};
  for (const auto& bs : glm.branch_sets) {
    std::vector<Vertex> merged;
    for (Vertex p : bs) merged.insert(merged.end(), inner.branch_sets[p].begin(), inner.branch_sets[p].end());
    model.branch_sets.push_back(make_vertex_set(std::move(merged)));
  }
  if (auto check = check_minor_model(model); !check) throw InternalError("complete minor invalid: " + check.detail);
  return model;
}

}  // namespace gridlike
