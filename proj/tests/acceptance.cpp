// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gridlike/gridlike.hpp"
#include "oracles.hpp"

using namespace gridlike;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// GLMs produced by criteria 2 and 9, consumed by criterion 8.
std::vector<std::pair<std::string, GridLikeMinor>> produced;

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome grid_ground_truth() {
  for (Vertex l = 2; l <= 3; ++l) {
    const int tw = treewidth_exact(grid_graph(l));
    if (tw != l) return fail("treewidth of " + std::to_string(l) + "x" + std::to_string(l) + " grid is " + std::to_string(tw));
  }
  for (Vertex l = 2; l <= 4; ++l) {
    const Bramble b = crosses_bramble(l);
    const OrderCertificate c = bramble_order(b);
    const int brute = oracle::min_hitting_set(b.host().n(), b.elements());
    if (!c.exhaustive || c.order != l || brute != l) {
      return fail("crosses order for l=" + std::to_string(l) + ": search " + std::to_string(c.order) + ", brute force " +
                  std::to_string(brute));
    }
  }
  return {true, "treewidth(l x l grid) = l for l=2,3; crosses order = l for l=2,3,4"};
}

Outcome glm_examples() {
  for (Vertex l = 2; l <= 5; ++l) {
    GridLikeMinor glm = grid_rows_columns_glm(l);
    if (auto v = check_glm(glm); !v) return fail("rows/columns l=" + std::to_string(l) + ": " + v.reason);
    if (glm.order != l + 1) return fail("order " + std::to_string(glm.order) + " for l=" + std::to_string(l));
    produced.emplace_back("rows/columns l=" + std::to_string(l), std::move(glm));
  }
  return {true, "rows/columns GLMs verify with order l+1 for l=2..5"};
}

Outcome bramble_path() {
  Rng rng(20240301);
  std::size_t elements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Bramble b = fixtures::random_bramble(static_cast<Vertex>(2 + trial % 9), rng);
    elements += b.size();
    const Path p = hitting_path(b);
    if (!is_path(b.host(), p) || !hits_all(b.elements(), p)) return fail("instance " + std::to_string(trial));
  }
  return {true, "200/200 hitting paths meet every element (" + std::to_string(elements) + " elements total)"};
}

Outcome many_paths_check() {
  for (int l = 3; l <= 4; ++l) {
    const Bramble b = crosses_bramble(l);
    const PathSystem ps = many_paths(b, 1, l);
    if (auto v = check_path_system(b.host(), ps); !v) return fail("l=" + std::to_string(l) + ": " + v.reason);
    if (intersection_graph(b.host(), ps.spines).m() != 0) return fail("spines intersect");
  }
  Rng rng(777);
  int compared = 0;
  while (compared < 100) {
    const Vertex n = static_cast<Vertex>(2 + uniform_index(rng, 9));
    const Graph g = random_graph(n, 0.35, rng);
    VertexSet a, c;
    for (Vertex v = 0; v < n; ++v) {
      const auto roll = uniform_index(rng, 4);
      if (roll == 0) a.push_back(v);
      if (roll == 1) c.push_back(v);
    }
    if (a.empty() || c.empty()) continue;
    ++compared;
    const int cut = oracle::min_vertex_cut(g, a, c);
    const DisjointPaths exact = vertex_disjoint_paths(g, a, c, cut);
    const DisjointPaths over = vertex_disjoint_paths(g, a, c, cut + 1);
    if ((cut > 0 && !exact.paths) || over.paths || static_cast<int>(over.cut.size()) != cut) {
      return fail("graph " + std::to_string(compared) + " disagrees with minimum cut " + std::to_string(cut));
    }
  }
  return {true, "path systems valid on 3x3 and 4x4 crosses; 100/100 random graphs match brute-force minimum cut"};
}

Outcome lll_transversal() {
  const std::uint64_t max_rounds = 10'000;
  std::uint64_t worst = 0;
  int successes = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int r = 2 + trial % 2;
    Rng rng(static_cast<std::uint64_t>(trial));
    const ColouredGraph cg = random_degenerate_coloured(r, 1, lll_threshold(r, 1), rng);
    const ResampleOutcome out = transversal_lll(cg, 1, static_cast<std::uint64_t>(trial), max_rounds);
    if (out.transversal && check_transversal(cg, *out.transversal)) ++successes;
    worst = std::max(worst, out.rounds);
  }
  const std::string summary =
      std::to_string(successes) + "/1000 within " + std::to_string(max_rounds) + " rounds (most rounds used: " +
      std::to_string(worst) + ")";
  return {successes == 1000, summary};
}

Outcome counterexample() {
  std::string notes;
  for (int r = 2; r <= 4; ++r) {
    for (int d = 1; d <= 2; ++d) {
      const ColouredGraph cg = counterexample_graph(r, d);
      const std::string tag = "r=" + std::to_string(r) + " d=" + std::to_string(d);
      if (oracle::has_transversal(cg.graph(), cg.classes())) return fail(tag + ": transversal exists");
      if (exhaustive_transversal(cg).transversal) return fail(tag + ": search found a transversal");
      for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
          const Graph pair = cg.bichromatic(i, j);
          const int deg = oracle::degeneracy(pair);
          if (pair.m() > 0 && deg != d) return fail(tag + ": pair degeneracy " + std::to_string(deg));
          if (i == 0 && deg != d) return fail(tag + ": pair with V1 has degeneracy " + std::to_string(deg));
        }
      }
    }
  }
  return {true,
          "no transversal for r<=4, d<=2; every non-empty bichromatic pair (those meeting V1) has degeneracy exactly d, "
          "pairs among V2..Vr are edgeless"};
}

// Canonical key of a bipartite graph between two labelled classes of three
// under permutations within each class and swapping the classes.
std::uint32_t forest_key(std::uint32_t bits) {
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::uint32_t best = ~0u;
  for (int swap = 0; swap < 2; ++swap)
    for (const auto& p : perms)
      for (const auto& q : perms) {
        std::uint32_t image = 0;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            if (bits >> (a * 3 + b) & 1) image |= swap ? 1u << (q[b] * 3 + p[a]) : 1u << (p[a] * 3 + q[b]);
        best = std::min(best, image);
      }
  return best;
}

Outcome greedy_remark() {
  std::set<std::uint32_t> seen;
  int forests = 0;
  for (std::uint32_t bits = 0; bits < (1u << 9); ++bits) {
    std::vector<Edge> edges;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (bits >> (a * 3 + b) & 1) edges.emplace_back(a, 3 + b);
    const Graph g(6, edges);
    if (oracle::degeneracy(g) > 1) continue;
    if (!seen.insert(forest_key(bits)).second) continue;
    ++forests;
    const ColouredGraph cg(g, {{0, 1, 2}, {3, 4, 5}});
    const auto t = transversal_greedy(cg, 1);
    if (!t || !check_transversal(cg, *t)) return fail("forest mask " + std::to_string(bits));
  }
  Rng rng(4242);
  for (int trial = 0; trial < 500; ++trial) {
    const ColouredGraph cg = random_degenerate_coloured(3, 1, greedy_threshold(3, 1), rng);
    const auto t = transversal_greedy(cg, 1);
    if (!t || !check_transversal(cg, *t)) return fail("random r=3 instance " + std::to_string(trial));
  }
  return {true, std::to_string(forests) + "/" + std::to_string(forests) +
                    " non-isomorphic forests on 3+3 classes and 500/500 random r=3 instances"};
}

Outcome scaled_pipeline() {
  const Bramble b = crosses_bramble(4);
  try {
    const GlmResult r = find_glm(b, 3, DegeneracyBound::mader(), {.k_override = 1});
    if (r.branch != GlmResult::Branch::kTransversal) return fail("took the dense-pair branch");
    if (auto v = check_glm(r.glm); !v) return fail("output fails verification: " + v.reason);
    const Graph h = intersection_graph(r.glm.host, r.glm.paths);
    if (!is_subdivided_clique(h, 3)) return fail("intersection graph is not the 1-subdivision of K_3");
    produced.emplace_back("4x4 pipeline", r.glm);
    return {true, "transversal branch, verified, intersection graph = 1-subdivision of K_3"};
  } catch (const Error& e) {
    const PathSystem ps = many_paths(b, 1, 3);
    return fail(std::string(e.what()) + " (first spine has " + std::to_string(ps.spines[0].size()) +
                " vertex; every 0-1 and 0-2 link starts there)");
  }
}

Outcome converse() {
  std::string covered;
  for (const auto& [name, glm] : produced) {
    const LowerBoundCertificate cert = lower_bound_bramble(glm, 2);
    if (!is_bramble(glm.host, cert.elements)) return fail(name + ": not a bramble");
    const int order = oracle::min_hitting_set(glm.host.n(), cert.elements);
    const int need = (glm.order + 1) / 2;
    if (order < need) return fail(name + ": bramble order " + std::to_string(order) + " < " + std::to_string(need));
    if (cert.treewidth_bound != need - 1) return fail(name + ": claimed bound " + std::to_string(cert.treewidth_bound));
    // Treewidth of the host: exact up to 20 vertices, else the crosses bramble
    // of a square grid host bounds it from below.
    int tw_low = 0;
    if (glm.host.n() <= kTreewidthLimit) {
      tw_low = treewidth_exact(glm.host);
    } else {
      const Vertex side = static_cast<Vertex>(std::lround(std::sqrt(glm.host.n())));
      if (!(glm.host == grid_graph(side))) return fail(name + ": no treewidth reference");
      tw_low = bramble_order(crosses_bramble(side)).order - 1;
    }
    if (tw_low < cert.treewidth_bound) return fail(name + ": treewidth " + std::to_string(tw_low) + " below bound");
    covered += (covered.empty() ? "" : ", ") + name;
  }
  const bool pipeline = std::any_of(produced.begin(), produced.end(), [](const auto& p) { return p.first == "4x4 pipeline"; });
  return {true, "certificates valid for " + covered + (pipeline ? "" : "; criterion 9 produced no GLM to check")};
}

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

Outcome complete_minor_in_product() {
  for (Vertex l = 2; l <= 4; ++l) {
    const GridLikeMinor glm = grid_rows_columns_glm(l);
    const MinorModel m = product_complete_minor(glm.host, glm);
    if (!verify_minor_model(m) || !(m.pattern == complete_graph(l + 1)) || !(m.host == cartesian_k2(grid_graph(l)))) {
      return fail("l=" + std::to_string(l));
    }
  }
  const Graph q3 = cartesian_k2(grid_graph(2));
  if (!isomorphic(q3, cube())) return fail("2x2 grid x K2 is not the 3-cube");
  if (!oracle::has_clique_minor(q3, 3)) return fail("exhaustive search finds no K_3 minor in the 3-cube");
  return {true, "K_{l+1} models verified in grid x K2 for l=2,3,4; 3-cube K_3 minor confirmed exhaustively"};
}

Outcome product_treewidth() {
  int graphs = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      ++graphs;
      const int tw = treewidth_exact(g);
      if (tw != oracle::treewidth(g)) return fail("treewidth disagreement on a graph with " + std::to_string(n) + " vertices");
      const int tw2 = treewidth_exact(cartesian_k2(g));
      if (tw2 > 2 * tw + 1) return fail("treewidth(g x K2) = " + std::to_string(tw2) + " > 2*" + std::to_string(tw) + "+1");
    }
  }
  return {graphs == 208, std::to_string(graphs) + " graphs (expected 208 on 1..6 vertices) satisfy tw(g x K2) <= 2 tw(g) + 1"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "grid ground truth", 60, grid_ground_truth},
      {2, "grid-like-minor examples", 5, glm_examples},
      {3, "hitting path", 60, bramble_path},
      {4, "path systems and Menger", 120, many_paths_check},
      {5, "local-lemma transversal", 120, lll_transversal},
      {6, "transversal tightness", 30, counterexample},
      {7, "greedy transversal", 120, greedy_remark},
      {9, "scaled extraction pipeline", 30, scaled_pipeline},
      {8, "treewidth converse", 60, converse},
      {10, "complete minor in G x K2", 60, complete_minor_in_product},
      {11, "product treewidth bound", 120, product_treewidth},
  };
  std::vector<std::string> lines(12);
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) out = fail(out.detail + "; exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
    failures += !out.pass;
    char buf[64];
    std::snprintf(buf, sizeof buf, " [%.2f s]", seconds);
    lines[c.id] = std::string(out.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(c.id) + " (" + c.name +
                  "): " + out.detail + buf;
  }
  for (int id = 1; id <= 11; ++id) std::printf("%s\n", lines[id].c_str());
  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
