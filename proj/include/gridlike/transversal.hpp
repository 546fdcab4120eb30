#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridlike/graph.hpp"
#include "gridlike/random.hpp"

namespace gridlike {

/// A graph with a proper colouring given as its colour classes.
class ColouredGraph {
 public:
  /// Throws InputError unless the classes partition V(g) and no edge lies
  /// inside a class.
  ColouredGraph(Graph g, std::vector<VertexSet> classes) : graph_(std::move(g)), classes_(std::move(classes)) {
    colour_.assign(static_cast<std::size_t>(graph_.n()), -1);
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      classes_[c] = make_vertex_set(std::move(classes_[c]));
      require_in_range(graph_, classes_[c]);
      for (Vertex v : classes_[c]) {
        if (colour_[v] >= 0) throw InputError("vertex " + std::to_string(v) + " is in two classes");
        colour_[v] = static_cast<int>(c);
      }
    }
    for (Vertex v = 0; v < graph_.n(); ++v) {
      if (colour_[v] < 0) throw InputError("vertex " + std::to_string(v) + " has no class");
    }
    for (auto [u, v] : graph_.edges()) {
      if (colour_[u] == colour_[v]) {
        throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " inside class " +
                         std::to_string(colour_[u]));
      }
    }
  }

  const Graph& graph() const { return graph_; }
  const std::vector<VertexSet>& classes() const { return classes_; }
  int r() const { return static_cast<int>(classes_.size()); }
  int colour_of(Vertex v) const { return colour_[v]; }

  /// Edges with an endpoint in class i.
  std::size_t class_edges(int i) const {
    std::size_t m = 0;
    for (Vertex v : classes_[i]) m += graph_.degree(v);
    return m;
  }

  /// H[V_i + V_j], relabelled in sorted vertex order.
  Graph bichromatic(int i, int j) const {
    VertexSet both = classes_[i];
    both.insert(both.end(), classes_[j].begin(), classes_[j].end());
    return induced_subgraph(graph_, make_vertex_set(std::move(both)));
  }

 private:
  Graph graph_;
  std::vector<VertexSet> classes_;
  std::vector<int> colour_;
};

/// vertices[i] is the representative of class i.
struct Transversal {
  std::vector<Vertex> vertices;
  friend bool operator==(const Transversal&, const Transversal&) = default;
};

inline Verdict check_transversal(const ColouredGraph& cg, const Transversal& t) {
  if (t.vertices.size() != static_cast<std::size_t>(cg.r())) {
    return Verdict::fail("expected " + std::to_string(cg.r()) + " vertices");
  }
  for (int i = 0; i < cg.r(); ++i) {
    const Vertex v = t.vertices[i];
    if (!cg.graph().contains(v) || cg.colour_of(v) != i) {
      return Verdict::fail("vertex " + std::to_string(v) + " is not in class " + std::to_string(i));
    }
  }
  for (int i = 0; i < cg.r(); ++i) {
    for (int j = i + 1; j < cg.r(); ++j) {
      if (cg.graph().has_edge(t.vertices[i], t.vertices[j])) {
        return Verdict::fail("vertices " + std::to_string(t.vertices[i]) + " and " + std::to_string(t.vertices[j]) +
                             " are adjacent");
      }
    }
  }
  return Verdict::pass();
}

/// ceil(2e(2r - 3)d): class size at which a transversal is guaranteed when
/// every pair of classes induces a d-degenerate graph.
inline int lll_threshold(int r, int d) {
  if (r < 2) throw PreconditionError("lll_threshold needs r >= 2");
  if (d < 0) throw PreconditionError("lll_threshold needs d >= 0");
  return static_cast<int>(std::ceil(2.0 * std::numbers::e * (2.0 * r - 3.0) * d));
}

/// r(r-1)d + 1: class size at which minimum-degree greedy is guaranteed.
inline int greedy_threshold(int r, int d) { return r * (r - 1) * d + 1; }

struct ResampleOutcome {
  std::optional<Transversal> transversal;
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
};

/// Moser-Tardos resampling. Each class draws a uniform representative; while
/// two representatives are adjacent, the lexicographically least such edge
/// has both of its classes redrawn. Gives up after max_rounds resamplings.
inline ResampleOutcome moser_tardos(const ColouredGraph& cg, std::uint64_t seed, std::uint64_t max_rounds) {
  ResampleOutcome out;
  out.seed = seed;
  const int r = cg.r();
  for (const auto& cls : cg.classes())
    if (cls.empty()) return out;
  Rng rng(seed);
  const auto draw = [&](int i) {
    const auto& cls = cg.classes()[i];
    return cls[uniform_index(rng, cls.size())];
  };
  Transversal t;
  for (int i = 0; i < r; ++i) t.vertices.push_back(draw(i));
  std::vector<Vertex> chosen(static_cast<std::size_t>(r));
  for (;;) {
    chosen = t.vertices;
    std::sort(chosen.begin(), chosen.end());
    std::optional<Edge> violated;
    for (std::size_t a = 0; a < chosen.size() && !violated; ++a) {
      for (std::size_t b = a + 1; b < chosen.size(); ++b) {
        if (cg.graph().has_edge(chosen[a], chosen[b])) {
          violated = Edge{chosen[a], chosen[b]};
          break;
        }
      }
    }
    if (!violated) break;
    if (out.rounds >= max_rounds) return out;
    ++out.rounds;
    const int ci = cg.colour_of(violated->first);
    const int cj = cg.colour_of(violated->second);
    t.vertices[std::min(ci, cj)] = draw(std::min(ci, cj));
    t.vertices[std::max(ci, cj)] = draw(std::max(ci, cj));
  }
  if (!check_transversal(cg, t)) throw InternalError("resampling returned a dependent set");
  out.transversal = std::move(t);
  return out;
}

/// Degeneracy of every bichromatic subgraph, as a matrix indexed by class.
inline int max_bichromatic_degeneracy(const ColouredGraph& cg) {
  int worst = 0;
  for (int i = 0; i < cg.r(); ++i)
    for (int j = i + 1; j < cg.r(); ++j) worst = std::max(worst, degeneracy(cg.bichromatic(i, j)).value);
  return worst;
}

/// Moser-Tardos under the degenerate-pairs hypothesis: every class has at
/// least lll_threshold(r, d) vertices and every bichromatic subgraph is
/// d-degenerate. Hypothesis violations throw PreconditionError; an absent
/// result means max_rounds ran out.
inline ResampleOutcome transversal_lll(const ColouredGraph& cg, int d, std::uint64_t seed, std::uint64_t max_rounds) {
  const int r = cg.r();
  if (r < 2) throw PreconditionError("transversal_lll needs at least two classes");
  const int need = lll_threshold(r, d);
  for (int i = 0; i < r; ++i) {
    if (cg.classes()[i].size() < static_cast<std::size_t>(std::max(need, 1))) {
      throw PreconditionError("class " + std::to_string(i) + " has " + std::to_string(cg.classes()[i].size()) +
                              " vertices, fewer than " + std::to_string(std::max(need, 1)));
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const Graph pair = cg.bichromatic(i, j);
      if (pair.m() > static_cast<std::size_t>(d) * pair.n() || degeneracy(pair).value > d) {
        throw PreconditionError("classes " + std::to_string(i) + " and " + std::to_string(j) +
                                " induce a graph that is not " + std::to_string(d) + "-degenerate");
      }
    }
  }
  return moser_tardos(cg, seed, max_rounds);
}

/// Repeatedly takes the candidate of least degree among the remaining
/// candidates (ties to the smaller index), fixes it for its class, and drops
/// its class-mates and neighbours from candidacy. When every class has at
/// least greedy_threshold(r, d) vertices and every bichromatic subgraph is
/// d-degenerate, success is guaranteed and failure throws InternalError.
inline std::optional<Transversal> transversal_greedy(const ColouredGraph& cg, int d) {
  const Graph& g = cg.graph();
  const int r = cg.r();
  std::vector<char> candidate(static_cast<std::size_t>(g.n()), 1);
  std::vector<int> deg(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) deg[v] = static_cast<int>(g.degree(v));
  std::vector<int> remaining(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) remaining[i] = static_cast<int>(cg.classes()[i].size());
  const auto drop = [&](Vertex v) {
    if (!candidate[v]) return;
    candidate[v] = 0;
    --remaining[cg.colour_of(v)];
    for (Vertex w : g.neighbors(v)) --deg[w];
  };

  Transversal t;
  t.vertices.assign(static_cast<std::size_t>(r), -1);
  for (int step = 0; step < r; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (candidate[v] && t.vertices[cg.colour_of(v)] < 0 && (pick < 0 || deg[v] < deg[pick])) pick = v;
    }
    bool stuck = pick < 0;
    for (int i = 0; i < r && !stuck; ++i) stuck = t.vertices[i] < 0 && remaining[i] == 0;
    if (stuck) {
      bool guaranteed = d >= 0;
      for (const auto& cls : cg.classes())
        guaranteed = guaranteed && cls.size() >= static_cast<std::size_t>(greedy_threshold(r, d));
      if (guaranteed && max_bichromatic_degeneracy(cg) <= d) {
        throw InternalError("greedy failed although the size bound holds");
      }
      return std::nullopt;
    }
    const int c = cg.colour_of(pick);
    t.vertices[c] = pick;
    for (Vertex w : cg.classes()[c]) drop(w);
    for (Vertex w : g.neighbors(pick)) drop(w);
  }
  if (!check_transversal(cg, t)) throw InternalError("greedy returned a dependent set");
  return t;
}

/// Non-negative rational num/den.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct DeletionStep {
  Vertex vertex;
  int colour;
  std::size_t class_edges;  // m_i before the deletion
  std::size_t class_size;   // n_i before the deletion
  std::size_t degree;
};

struct GeneralOutcome {
  ResampleOutcome resample;
  std::vector<DeletionStep> deletions;
  int target_size = 0;
};

/// Independent transversal under the edge-density hypothesis: n_i >= 2et and
/// m_i <= t n_i for every class, where m_i counts edges leaving class i.
/// Oversized classes are first trimmed to ceil(2et) by deleting a vertex of
/// maximum degree, which never raises m_i / n_i; resampling then runs on what
/// is left.
inline GeneralOutcome transversal_general(const ColouredGraph& cg, Rational t, std::uint64_t seed,
                                          std::uint64_t max_rounds) {
  if (t.den <= 0 || t.num < 0) throw PreconditionError("t must be a non-negative rational");
  GeneralOutcome out;
  // A class needs at least one vertex even when t = 0.
  out.target_size = std::max(1, static_cast<int>(std::ceil(2.0 * std::numbers::e * t.value())));
  const int r = cg.r();
  const Graph& g = cg.graph();
  for (int i = 0; i < r; ++i) {
    const auto n_i = static_cast<std::int64_t>(cg.classes()[i].size());
    const auto m_i = static_cast<std::int64_t>(cg.class_edges(i));
    if (n_i < out.target_size) {
      throw PreconditionError("class " + std::to_string(i) + " smaller than ceil(2et) = " +
                              std::to_string(out.target_size));
    }
    if (m_i * t.den > t.num * n_i) {
      throw PreconditionError("class " + std::to_string(i) + " has m_i > t n_i");
    }
  }

  std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
  std::vector<std::size_t> deg(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
  std::vector<std::size_t> size(static_cast<std::size_t>(r)), edges(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    size[i] = cg.classes()[i].size();
    edges[i] = cg.class_edges(i);
  }
  // max_i m_i / n_i as a fraction, compared by cross-multiplication.
  const auto worst_ratio = [&] {
    std::pair<std::size_t, std::size_t> worst{0, 1};
    for (int i = 0; i < r; ++i)
      if (edges[i] * worst.second > worst.first * size[i]) worst = {edges[i], size[i]};
    return worst;
  };

  for (int i = 0; i < r; ++i) {
    while (size[i] > static_cast<std::size_t>(out.target_size)) {
      Vertex pick = -1;
      for (Vertex v : cg.classes()[i])
        if (alive[v] && (pick < 0 || deg[v] > deg[pick])) pick = v;
      const DeletionStep step{pick, i, edges[i], size[i], deg[pick]};
      // (m_i - deg v) / (n_i - 1) <= m_i / n_i
      if ((step.class_edges - step.degree) * step.class_size > step.class_edges * (step.class_size - 1)) {
        throw InternalError("deleting a maximum-degree vertex raised m_i / n_i");
      }
      const auto before = worst_ratio();
      alive[pick] = 0;
      --size[i];
      edges[i] -= deg[pick];
      for (Vertex w : g.neighbors(pick)) {
        if (!alive[w]) continue;
        --deg[w];
        --edges[cg.colour_of(w)];
      }
      deg[pick] = 0;
      const auto after = worst_ratio();
      if (after.first * before.second > before.first * after.second) {
        throw InternalError("max m_i / n_i increased during trimming");
      }
      out.deletions.push_back(step);
    }
  }

  VertexSet kept;
  for (Vertex v = 0; v < g.n(); ++v)
    if (alive[v]) kept.push_back(v);
  std::vector<Vertex> index(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = static_cast<Vertex>(i);
  std::vector<VertexSet> classes(static_cast<std::size_t>(r));
  for (Vertex v : kept) classes[cg.colour_of(v)].push_back(index[v]);
  const ColouredGraph trimmed(induced_subgraph(g, kept), std::move(classes));

  out.resample = moser_tardos(trimmed, seed, max_rounds);
  if (out.resample.transversal) {
    for (Vertex& v : out.resample.transversal->vertices) v = kept[v];
    if (!check_transversal(cg, *out.resample.transversal)) throw InternalError("trimmed transversal invalid");
  }
  return out;
}

/// Classes V_1 (d(r-1) vertices, split into blocks W_2..W_r of size d) and
/// V_2..V_r (n vertices each, default d(r-1)), with W_i complete to V_i.
/// Every vertex of V_1 dominates a class, so no independent transversal
/// exists. Vertex order: V_1 first, then V_2, ..., V_r.
inline ColouredGraph counterexample_graph(int r, int d, std::optional<int> n = std::nullopt) {
  if (r < 2 || d < 1) throw PreconditionError("counterexample_graph needs r >= 2 and d >= 1");
  const int size = n.value_or(d * (r - 1));
  if (size < 1) throw PreconditionError("class size must be positive");
  const Vertex first = d * (r - 1);
  std::vector<VertexSet> classes(static_cast<std::size_t>(r));
  for (Vertex v = 0; v < first; ++v) classes[0].push_back(v);
  std::vector<Edge> edges;
  for (int i = 1; i < r; ++i) {
    const Vertex base = first + (i - 1) * size;
    for (Vertex v = 0; v < size; ++v) classes[i].push_back(base + v);
    for (Vertex w = (i - 1) * d; w < i * d; ++w)
      for (Vertex v = 0; v < size; ++v) edges.emplace_back(w, base + v);
  }
  return ColouredGraph(Graph(first + (r - 1) * size, edges), std::move(classes));
}

/// `r` classes of `n` vertices (class i holds i*n .. i*n+n-1). For every pair
/// of classes, each vertex of the pair, visited in random order, is joined to
/// up to `d` random earlier vertices of the other class, so every bichromatic
/// subgraph is d-degenerate with at most d(|V_i| + |V_j|) edges.
inline ColouredGraph random_degenerate_coloured(int r, int d, int n, Rng& rng, double density = 1.0) {
  if (r < 1 || d < 0 || n < 0) throw PreconditionError("random_degenerate_coloured needs r >= 1, d >= 0, n >= 0");
  std::vector<VertexSet> classes(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    for (int v = 0; v < n; ++v) classes[i].push_back(i * n + v);
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      std::vector<Vertex> order = classes[i];
      order.insert(order.end(), classes[j].begin(), classes[j].end());
      for (std::size_t a = order.size(); a > 1; --a) std::swap(order[a - 1], order[uniform_index(rng, a)]);
      for (std::size_t a = 0; a < order.size(); ++a) {
        const int side = order[a] / n;
        std::vector<Vertex> earlier;
        for (std::size_t b = 0; b < a; ++b)
          if (order[b] / n != side) earlier.push_back(order[b]);
        for (int t = 0; t < d && !earlier.empty(); ++t) {
          const std::size_t pick = uniform_index(rng, earlier.size());
          if (bernoulli(rng, density)) edges.push_back(std::minmax(order[a], earlier[pick]));
          earlier.erase(earlier.begin() + static_cast<std::ptrdiff_t>(pick));
        }
      }
    }
  }
  return ColouredGraph(Graph(r * n, edges), std::move(classes));
}

/// Depth-first search over all choices, classes in index order. `complete` is
/// false when `limit` nodes were visited without settling the question.
struct ExhaustiveTransversal {
  std::optional<Transversal> transversal;
  bool complete = true;
};

inline ExhaustiveTransversal exhaustive_transversal(const ColouredGraph& cg, std::uint64_t limit = 50'000'000) {
  ExhaustiveTransversal out;
  const int r = cg.r();
  std::vector<Vertex> pick;
  std::uint64_t visited = 0;
  const auto& classes = cg.classes();
  // Depth-first with pruning on adjacency to earlier picks.
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == r) return true;
    for (Vertex v : classes[i]) {
      if (++visited > limit) {
        out.complete = false;
        return false;
      }
      bool ok = true;
      for (Vertex u : pick) ok = ok && !cg.graph().has_edge(u, v);
      if (!ok) continue;
      pick.push_back(v);
      if (self(self, i + 1)) return true;
      pick.pop_back();
      if (!out.complete) return false;
    }
    return false;
  };
  if (rec(rec, 0)) out.transversal = Transversal{pick};
  return out;
}

}  // namespace gridlike
