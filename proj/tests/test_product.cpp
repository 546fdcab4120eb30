#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "gridlike/product.hpp"
#include "oracles.hpp"

using namespace gridlike;

namespace {

// The 3-cube on bit strings of length 3.
Graph cube() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (!(v >> b & 1)) edges.emplace_back(v, v | (1 << b));
  return Graph(8, edges);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(a.n()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) ok = ok && b.has_edge(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST(Cartesian, SmallCases) {
  EXPECT_EQ(cartesian_k2(Graph(1)), complete_graph(2));
  EXPECT_TRUE(isomorphic(cartesian_k2(path_graph(2)), cycle_graph(4)));
  EXPECT_TRUE(isomorphic(cartesian_k2(cycle_graph(4)), cube()));
  EXPECT_EQ(cartesian_kq(petersen_graph(), 1), petersen_graph());
  EXPECT_EQ(cartesian_kq(grid_graph(3), 2), cartesian_k2(grid_graph(3)));
  EXPECT_EQ(cartesian_kq(Graph(1), 4), complete_graph(4));
  EXPECT_THROW(cartesian_kq(Graph(1), 0), PreconditionError);
}

TEST(Cartesian, EdgeCountAndIndexing) {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(static_cast<Vertex>(trial % 9), 0.4, rng);
    const Graph p = cartesian_k2(g);
    EXPECT_EQ(p.m(), 2 * g.m() + static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) EXPECT_TRUE(p.has_edge(v, g.n() + v));
    for (auto [u, v] : g.edges()) EXPECT_TRUE(p.has_edge(g.n() + u, g.n() + v));
  }
}

TEST(ProductMinor, IntersectionGraphModels) {
  const GridLikeMinor two = grid_rows_columns_glm(2);
  const MinorModel m2 = product_minor_model(two.host, two);
  EXPECT_TRUE(verify_minor_model(m2));
  EXPECT_EQ(m2.pattern, complete_bipartite(2, 2));
  EXPECT_TRUE(isomorphic(m2.host, cube()));

  const GridLikeMinor three = grid_rows_columns_glm(3);
  const MinorModel m3 = product_minor_model(three.host, three);
  EXPECT_TRUE(verify_minor_model(m3));
  EXPECT_EQ(m3.pattern, complete_bipartite(3, 3));
}

TEST(ProductMinor, SinglePath) {
  GridLikeMinor glm;
  glm.host = path_graph(3);
  glm.paths = {{0, 1, 2}};
  glm.side_a = {0};
  glm.order = 1;
  glm.branch_sets = {{0}};
  const MinorModel m = product_minor_model(glm.host, glm);
  EXPECT_TRUE(verify_minor_model(m));
  EXPECT_EQ(m.branch_sets.size(), 1u);
  EXPECT_EQ(m.host.n(), 6);
  EXPECT_EQ(product_complete_minor(glm.host, glm).branch_sets.size(), 1u);
}

TEST(ProductMinor, RejectsInvalidGlm) {
  GridLikeMinor glm = grid_rows_columns_glm(3);
  glm.side_a.swap(glm.side_b);
  std::swap(glm.side_a[0], glm.side_b[0]);
  EXPECT_THROW(product_minor_model(glm.host, glm), PreconditionError);
  EXPECT_THROW(product_minor_model(grid_graph(4), grid_rows_columns_glm(3)), PreconditionError);
}

TEST(ProductComplete, GridGlms) {
  for (Vertex l = 2; l <= 5; ++l) {
    const GridLikeMinor glm = grid_rows_columns_glm(l);
    const MinorModel m = product_complete_minor(glm.host, glm);
    EXPECT_TRUE(verify_minor_model(m));
    EXPECT_EQ(m.pattern, complete_graph(l + 1));
    EXPECT_EQ(m.host.n(), 2 * l * l);
  }
  EXPECT_TRUE(oracle::has_clique_minor(cube(), 3));
}

TEST(KqProduct, ThreeCrossingPaths) {
  const Graph p3 = path_graph(3);
  const MinorModel m = intersection_minor_in_kq_product(p3, {{0, 1}, {1, 2}, {0, 1, 2}});
  EXPECT_TRUE(verify_minor_model(m));
  EXPECT_EQ(m.pattern, complete_graph(3));
  EXPECT_EQ(m.host, cartesian_kq(p3, 3));
}

TEST(KqProduct, DisjointSubgraphsNeedOneCopy) {
  const Graph p4 = path_graph(4);
  const MinorModel m = intersection_minor_in_kq_product(p4, {{0, 1}, {3}});
  EXPECT_EQ(m.host, p4);
  EXPECT_EQ(m.pattern.m(), 0u);
  EXPECT_TRUE(verify_minor_model(m));
}

TEST(KqProduct, ImproperColouringHasWitness) {
  try {
    intersection_minor_in_kq_product(path_graph(3), {{0, 1}, {1, 2}}, std::vector<int>{0, 0});
    FAIL() << "expected an improper colouring error";
  } catch (const ImproperColouring& e) {
    EXPECT_EQ(e.witness(), Edge(0, 1));
  }
}

TEST(KqProduct, BipartiteCaseMatchesProductModel) {
  const GridLikeMinor glm = grid_rows_columns_glm(3);
  std::vector<VertexSet> subgraphs;
  for (const Path& p : glm.paths) subgraphs.push_back(make_vertex_set(p));
  std::vector<int> colour(6, 0);
  for (int p : glm.side_b) colour[p] = 1;
  const MinorModel a = intersection_minor_in_kq_product(glm.host, subgraphs, colour);
  const MinorModel b = product_minor_model(glm.host, glm);
  EXPECT_EQ(a.branch_sets, b.branch_sets);
  EXPECT_EQ(a.host, b.host);
}

TEST(KqProduct, RandomSubgraphFamilies) {
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_connected_graph(8, 0.3, rng);
    std::vector<VertexSet> family;
    for (int s = 0; s < 5; ++s) {
      const Vertex a = static_cast<Vertex>(uniform_index(rng, 8));
      VertexSet x{a};
      for (Vertex u : g.neighbors(a))
        if (bernoulli(rng, 0.5)) x.push_back(u);
      family.push_back(make_vertex_set(std::move(x)));
    }
    EXPECT_TRUE(verify_minor_model(intersection_minor_in_kq_product(g, family)));
  }
}

TEST(Treewidth, ProductBoundOnSmallGraphs) {
  Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(static_cast<Vertex>(1 + trial % 7), 0.5, rng);
    EXPECT_LE(treewidth_exact(cartesian_k2(g)), 2 * treewidth_exact(g) + 1);
  }
}
