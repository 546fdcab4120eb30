#pragma once

#include <algorithm>
#include <vector>

#include "gridlike/bramble.hpp"
#include "gridlike/generators.hpp"
#include "gridlike/random.hpp"

namespace fixtures {

using namespace gridlike;

/// Connected vertex set grown from a random seed vertex by random frontier
/// steps, up to `size` vertices.
inline VertexSet random_connected_set(const Graph& g, std::size_t size, Rng& rng) {
  std::vector<Vertex> set{static_cast<Vertex>(uniform_index(rng, static_cast<std::uint64_t>(g.n())))};
  while (set.size() < size) {
    std::vector<Vertex> frontier;
    for (Vertex v : set)
      for (Vertex u : g.neighbors(v))
        if (std::find(set.begin(), set.end(), u) == set.end()) frontier.push_back(u);
    if (frontier.empty()) break;
    set.push_back(frontier[uniform_index(rng, frontier.size())]);
  }
  return make_vertex_set(std::move(set));
}

/// Random connected host on n vertices with a bramble built by rejection:
/// candidate sets are kept when they touch every set kept so far.
inline Bramble random_bramble(Vertex n, Rng& rng, int attempts = 60) {
  const Graph g = random_connected_graph(n, 0.25, rng);
  std::vector<VertexSet> elements;
  for (int a = 0; a < attempts; ++a) {
    const std::size_t size = 1 + uniform_index(rng, static_cast<std::uint64_t>(std::max<Vertex>(1, n / 2)));
    VertexSet x = random_connected_set(g, size, rng);
    if (std::find(elements.begin(), elements.end(), x) != elements.end()) continue;
    if (std::all_of(elements.begin(), elements.end(), [&](const VertexSet& y) { return sets_touch(g, x, y); })) {
      elements.push_back(std::move(x));
    }
  }
  return Bramble(g, std::move(elements));
}

}  // namespace fixtures
