#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridlike/bramble.hpp"
#include "gridlike/extraction.hpp"
#include "gridlike/generators.hpp"
#include "gridlike/graph.hpp"
#include "gridlike/minor.hpp"
#include "gridlike/transversal.hpp"

namespace gridlike {

/// A set of paths whose intersection graph is bipartite and has a K_order
/// minor. `side_a`/`side_b` index into `paths`; `branch_sets` (also path
/// indices) form the K_order model in the intersection graph.
struct GridLikeMinor {
  Graph host;
  std::vector<Path> paths;
  std::vector<int> side_a;
  std::vector<int> side_b;
  int order = 0;
  std::vector<VertexSet> branch_sets;
};

/// One vertex per path; two paths adjacent iff they share a host vertex.
inline Graph intersection_graph(const Graph& g, const std::vector<Path>& paths) {
  std::vector<VertexSet> sets;
  sets.reserve(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (auto v = check_path(g, paths[i]); !v) throw InputError("path " + std::to_string(i) + ": " + v.reason);
    sets.push_back(make_vertex_set(paths[i]));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets_intersect(sets[i], sets[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(static_cast<Vertex>(paths.size()), edges);
}

/// Checks every GridLikeMinor invariant and names the first one that fails.
inline Verdict check_glm(const GridLikeMinor& glm) {
  for (std::size_t i = 0; i < glm.paths.size(); ++i) {
    if (auto v = check_path(glm.host, glm.paths[i]); !v) {
      return Verdict::fail("invalid path " + std::to_string(i) + ": " + v.reason);
    }
  }
  const Graph h = intersection_graph(glm.host, glm.paths);
  if (!is_bipartite(h)) return Verdict::fail("not bipartite");

  std::vector<int> side(glm.paths.size(), -1);
  for (int s = 0; s < 2; ++s) {
    for (int p : s == 0 ? glm.side_a : glm.side_b) {
      if (p < 0 || static_cast<std::size_t>(p) >= glm.paths.size()) {
        return Verdict::fail("bipartition names unknown path " + std::to_string(p));
      }
      if (side[p] >= 0) return Verdict::fail("path " + std::to_string(p) + " listed twice in the bipartition");
      side[p] = s;
    }
  }
  for (std::size_t p = 0; p < side.size(); ++p) {
    if (side[p] < 0) return Verdict::fail("path " + std::to_string(p) + " missing from the bipartition");
  }
  for (auto [u, v] : h.edges()) {
    if (side[u] == side[v]) {
      return Verdict::fail("bipartition violated: paths " + std::to_string(u) + " and " + std::to_string(v) +
                           " intersect on the same side");
    }
  }
  if (glm.order < 0) return Verdict::fail("negative order");
  const MinorModel model{complete_graph(glm.order), h, glm.branch_sets};
  if (auto check = check_minor_model(model); !check) return Verdict::fail("minor model: " + check.detail);
  return Verdict::pass();
}

inline bool verify_glm(const GridLikeMinor& glm) { return static_cast<bool>(check_glm(glm)); }

/// Rows (paths 0..l-1) and columns (paths l..2l-1) of the l x l grid. Their
/// intersection graph is K_{l,l}; contracting the matching row i -- column i
/// for i < l-1 yields K_{l+1}.
inline GridLikeMinor grid_rows_columns_glm(Vertex l) {
  if (l < 2) throw PreconditionError("grid_rows_columns_glm needs l >= 2");
  GridLikeMinor glm;
  glm.host = grid_graph(l);
  for (Vertex r = 0; r < l; ++r) {
    Path row;
    for (Vertex c = 0; c < l; ++c) row.push_back(r * l + c);
    glm.paths.push_back(std::move(row));
  }
  for (Vertex c = 0; c < l; ++c) {
    Path col;
    for (Vertex r = 0; r < l; ++r) col.push_back(r * l + c);
    glm.paths.push_back(std::move(col));
  }
  for (Vertex i = 0; i < l; ++i) {
    glm.side_a.push_back(i);
    glm.side_b.push_back(l + i);
  }
  glm.order = l + 1;
  for (Vertex i = 0; i + 1 < l; ++i) glm.branch_sets.push_back({i, l + i});
  glm.branch_sets.push_back({l - 1});
  glm.branch_sets.push_back({2 * l - 1});
  return glm;
}

/// ceil(2e(2 C(l,2) - 3) d(l)): the number of linking paths per spine pair
/// that makes the transversal step go through. Defined for l >= 3.
inline int k_threshold(int l, const DegeneracyBound& bound) {
  if (l < 3) throw PreconditionError("k_threshold is defined for l >= 3");
  return lll_threshold(l * (l - 1) / 2, bound(l));
}

/// Does `h` have exactly the shape of the 1-subdivision of K_l laid out as
/// find_glm lays it out: vertices 0..l-1 the branch vertices, then one
/// subdivision vertex per pair (i, j), i < j, in lexicographic order?
inline bool is_subdivided_clique(const Graph& h, int l) {
  const int pairs = l * (l - 1) / 2;
  if (h.n() != l + pairs) return false;
  std::vector<Edge> expect;
  int p = l;
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j, ++p) {
      expect.emplace_back(i, p);
      expect.emplace_back(j, p);
    }
  }
  std::sort(expect.begin(), expect.end());
  return h.edges() == expect;
}

/// Same layout, but links may also meet spines other than their own ends.
inline bool contains_subdivided_clique(const Graph& h, int l) {
  const int pairs = l * (l - 1) / 2;
  if (h.n() != l + pairs) return false;
  for (Vertex i = 0; i < l; ++i)
    for (Vertex j = i + 1; j < l; ++j)
      if (h.has_edge(i, j)) return false;
  for (Vertex p = l; p < h.n(); ++p)
    for (Vertex q = p + 1; q < h.n(); ++q)
      if (h.has_edge(p, q)) return false;
  int p = l;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j, ++p)
      if (!h.has_edge(i, p) || !h.has_edge(j, p)) return false;
  return true;
}

struct FindGlmOptions {
  /// Links per spine pair; defaults to k_threshold(l, bound).
  std::optional<int> k_override;
  std::uint64_t seed = 0;
  /// Resampling cap; defaults to max(100, 10 |E(H)|).
  std::optional<std::uint64_t> max_rounds;
  std::uint64_t minor_budget = kDefaultMinorBudget;
  std::size_t exact_limit = kDefaultExactLimit;
};

struct GlmResult {
  enum class Branch { kTransversal, kDensePair };
  GridLikeMinor glm;
  PathSystem paths;
  Branch branch = Branch::kTransversal;
  /// For kDensePair: the two link families whose union was returned.
  std::pair<std::pair<int, int>, std::pair<int, int>> dense_pair{};
  std::uint64_t rounds = 0;
  /// Transversal branch: no chosen link meets a spine other than its two ends,
  /// so the intersection graph is exactly the 1-subdivision of K_l.
  bool exact_subdivision = false;
};

/// Steps after the path system is in hand. Every pair of link families is
/// first checked for a dense intersection graph, which already carries a
/// K_l minor. Otherwise one link per family is chosen so that the chosen
/// links are pairwise disjoint, and spines plus chosen links form a
/// 1-subdivision of K_l.
inline GlmResult assemble_glm(const Graph& g, const PathSystem& ps, const DegeneracyBound& bound,
                              const FindGlmOptions& opts = {}) {
  if (auto v = check_path_system(g, ps); !v) throw PreconditionError("invalid path system: " + v.reason);
  const int l = ps.l;
  GlmResult out;
  out.paths = ps;

  std::vector<std::pair<int, int>> keys;
  for (const auto& [key, family] : ps.links) keys.push_back(key);

  for (std::size_t x = 0; x < keys.size(); ++x) {
    for (std::size_t y = x + 1; y < keys.size(); ++y) {
      std::vector<Path> both = ps.links.at(keys[x]);
      const auto& second = ps.links.at(keys[y]);
      both.insert(both.end(), second.begin(), second.end());
      const Graph h = intersection_graph(g, both);
      if (degeneracy(h).value <= bound(l)) continue;
      DenseMinorResult dense = find_minor_dense(h, l, bound, {.enforce_bound = true, .exact_budget = opts.minor_budget});
      if (!dense.model) {
        throw RetryableError("links " + std::to_string(keys[x].first) + "," + std::to_string(keys[x].second) +
                             " and " + std::to_string(keys[y].first) + "," + std::to_string(keys[y].second) +
                             " are dense but no K_" + std::to_string(l) + " model was extracted");
      }
      GridLikeMinor glm;
      glm.host = g;
      glm.paths = std::move(both);
      for (int i = 0; i < ps.k; ++i) {
        glm.side_a.push_back(i);
        glm.side_b.push_back(ps.k + i);
      }
      glm.order = l;
      glm.branch_sets = dense.model->branch_sets;
      if (auto v = check_glm(glm); !v) throw InternalError("dense-pair grid-like-minor invalid: " + v.reason);
      out.glm = std::move(glm);
      out.branch = GlmResult::Branch::kDensePair;
      out.dense_pair = {keys[x], keys[y]};
      return out;
    }
  }

  // One colour class per link family.
  std::vector<Path> links;
  std::vector<VertexSet> classes;
  for (const auto& key : keys) {
    VertexSet cls;
    for (const Path& q : ps.links.at(key)) {
      cls.push_back(static_cast<Vertex>(links.size()));
      links.push_back(q);
    }
    classes.push_back(std::move(cls));
  }
  std::vector<Vertex> chosen;
  if (classes.size() <= 1) {
    for (const auto& cls : classes) chosen.push_back(cls.front());
  } else {
    const ColouredGraph cg(intersection_graph(g, links), classes);
    const std::uint64_t rounds = opts.max_rounds.value_or(std::max<std::uint64_t>(100, 10 * cg.graph().m()));
    const int r = cg.r();
    const int d = bound(l);
    bool hypotheses = true;
    for (const auto& cls : classes) hypotheses = hypotheses && cls.size() >= static_cast<std::size_t>(lll_threshold(r, d));
    ResampleOutcome outcome = hypotheses ? transversal_lll(cg, d, opts.seed, rounds) : moser_tardos(cg, opts.seed, rounds);
    out.rounds = outcome.rounds;
    if (outcome.transversal) {
      chosen = outcome.transversal->vertices;
    } else if (hypotheses) {
      throw RetryableError("resampling exhausted " + std::to_string(rounds) + " rounds; retry with another seed");
    } else {
      // Below the guaranteed size, distinguish bad luck from non-existence.
      ExhaustiveTransversal full = exhaustive_transversal(cg);
      if (full.transversal) {
        chosen = full.transversal->vertices;
      } else if (full.complete) {
        throw PreconditionError("the link families admit no pairwise disjoint choice at k=" + std::to_string(ps.k));
      } else {
        throw RetryableError("resampling exhausted and exhaustive search too large");
      }
    }
  }

  GridLikeMinor glm;
  glm.host = g;
  glm.paths = ps.spines;
  for (Vertex c : chosen) glm.paths.push_back(links[c]);
  glm.order = l;
  for (int i = 0; i < l; ++i) glm.side_a.push_back(i);
  for (std::size_t c = 0; c < chosen.size(); ++c) glm.side_b.push_back(l + static_cast<int>(c));
  // Branch set i: spine i plus the chosen links to later spines.
  glm.branch_sets.assign(static_cast<std::size_t>(l), {});
  for (int i = 0; i < l; ++i) glm.branch_sets[i].push_back(i);
  for (std::size_t c = 0; c < keys.size(); ++c) glm.branch_sets[keys[c].first].push_back(l + static_cast<int>(c));
  for (auto& bs : glm.branch_sets) bs = make_vertex_set(std::move(bs));

  const Graph h = intersection_graph(g, glm.paths);
  if (!contains_subdivided_clique(h, l)) {
    throw InternalError("chosen links do not form a 1-subdivision of K_" + std::to_string(l));
  }
  out.exact_subdivision = is_subdivided_clique(h, l);
  if (auto v = check_glm(glm); !v) throw InternalError("grid-like-minor invalid: " + v.reason);
  out.glm = std::move(glm);
  out.branch = GlmResult::Branch::kTransversal;
  return out;
}

/// Extracts a grid-like-minor of order l from a bramble of order at least
/// k * l, with k = k_override or k_threshold(l, bound).
///
/// Throws InsufficientOrder when the bramble is too small, RetryableError when
/// resampling or minor extraction runs out of budget, and PreconditionError
/// when a reduced k leaves no disjoint choice of links.
inline GlmResult find_glm(const Bramble& b, int l, const DegeneracyBound& bound, const FindGlmOptions& opts = {}) {
  if (l < 1) throw PreconditionError("find_glm needs l >= 1");
  const int k = opts.k_override ? *opts.k_override : k_threshold(l, bound);
  if (k < 1) throw PreconditionError("k must be positive");
  const PathSystem ps = many_paths(b, k, l, opts.exact_limit);
  return assemble_glm(b.host(), ps, bound, opts);
}

struct LowerBoundCertificate {
  /// G_i: host vertices covered by the paths of branch set i.
  std::vector<VertexSet> elements;
  int order = 0;  // l, the number of branch sets
  int clique_bound = 0;  // r
  int treewidth_bound = 0;  // ceil(l / r) - 1
};

/// Some r+1 pairwise adjacent vertices, if any.
inline std::optional<VertexSet> find_clique(const Graph& h, int size) {
  std::vector<Vertex> clique;
  auto rec = [&](auto&& self, Vertex from) -> bool {
    if (static_cast<int>(clique.size()) == size) return true;
    for (Vertex v = from; v < h.n(); ++v) {
      bool ok = true;
      for (Vertex u : clique) ok = ok && h.has_edge(u, v);
      if (!ok) continue;
      clique.push_back(v);
      if (self(self, v + 1)) return true;
      clique.pop_back();
    }
    return false;
  };
  if (size <= 0) return VertexSet{};
  if (rec(rec, 0)) return clique;
  return std::nullopt;
}

class CliqueFound : public PreconditionError {
 public:
  CliqueFound(const std::string& what, VertexSet clique) : PreconditionError(what), clique_(std::move(clique)) {}
  const VertexSet& clique() const { return clique_; }

 private:
  VertexSet clique_;
};

/// Turns the K_l model of a grid-like-minor into a bramble of the host: each
/// branch set becomes the union of its paths. If the intersection graph has
/// no K_{r+1} subgraph, no host vertex lies in more than r of these sets, so
/// every hitting set has at least ceil(l / r) vertices.
inline LowerBoundCertificate lower_bound_bramble(const GridLikeMinor& glm, int r) {
  if (r < 1) throw PreconditionError("r must be positive");
  if (auto v = check_glm(glm); !v) throw PreconditionError("invalid grid-like-minor: " + v.reason);
  const Graph h = intersection_graph(glm.host, glm.paths);
  if (auto clique = find_clique(h, r + 1)) {
    throw CliqueFound("intersection graph contains K_" + std::to_string(r + 1), *clique);
  }
  LowerBoundCertificate cert;
  cert.order = glm.order;
  cert.clique_bound = r;
  cert.treewidth_bound = (glm.order + r - 1) / r - 1;
  for (const auto& bs : glm.branch_sets) {
    std::vector<Vertex> cover;
    for (Vertex p : bs) cover.insert(cover.end(), glm.paths[p].begin(), glm.paths[p].end());
    cert.elements.push_back(make_vertex_set(std::move(cover)));
  }
  if (auto check = check_bramble(glm.host, cert.elements); !check) {
    throw InternalError("branch-set unions are not a bramble: " + check.reason);
  }
  std::vector<int> multiplicity(static_cast<std::size_t>(glm.host.n()), 0);
  for (const auto& x : cert.elements)
    for (Vertex v : x)
      if (++multiplicity[v] > r) throw InternalError("vertex " + std::to_string(v) + " lies in more than r elements");
  return cert;
}

}  // namespace gridlike
