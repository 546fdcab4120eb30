#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridlike/bramble.hpp"
#include "gridlike/graph.hpp"

namespace gridlike {

/// Vertex sequence; consecutive vertices adjacent, no repeats.
using Path = std::vector<Vertex>;

inline Verdict check_path(const Graph& g, const Path& p) {
  if (p.empty()) return Verdict::fail("empty path");
  for (Vertex v : p) {
    if (!g.contains(v)) return Verdict::fail("vertex " + std::to_string(v) + " out of range");
  }
  if (make_vertex_set(p).size() != p.size()) return Verdict::fail("repeated vertex");
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.has_edge(p[i], p[i + 1])) {
      return Verdict::fail("no edge " + std::to_string(p[i]) + "-" + std::to_string(p[i + 1]));
    }
  }
  return Verdict::pass();
}

inline bool is_path(const Graph& g, const Path& p) { return static_cast<bool>(check_path(g, p)); }

namespace detail {

class HitCounter {
 public:
  explicit HitCounter(const Bramble& b) : elements_(b.elements()), member_of_(static_cast<std::size_t>(b.host().n())) {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      for (Vertex v : elements_[i]) member_of_[v].push_back(i);
  }

  /// Per element, how many vertices of `p` it contains.
  std::vector<int> multiplicity(const Path& p) const {
    std::vector<int> count(elements_.size(), 0);
    for (Vertex v : p)
      for (std::size_t i : member_of_[v]) ++count[i];
    return count;
  }

  std::size_t hits(const Path& p) const {
    const auto count = multiplicity(p);
    return static_cast<std::size_t>(std::count_if(count.begin(), count.end(), [](int c) { return c > 0; }));
  }

  const std::vector<std::size_t>& containing(Vertex v) const { return member_of_[v]; }

 private:
  const std::vector<VertexSet>& elements_;
  std::vector<std::vector<std::size_t>> member_of_;
};

// Drop endpoints that do not reduce the number of elements hit.
inline void shorten(const HitCounter& counter, Path& p) {
  std::size_t target = counter.hits(p);
  while (p.size() >= 2) {
    Path back(p.begin(), p.end() - 1);
    if (counter.hits(back) == target) {
      p = std::move(back);
      continue;
    }
    Path front(p.begin() + 1, p.end());
    if (counter.hits(front) == target) {
      p = std::move(front);
      continue;
    }
    break;
  }
}

// Shortest route from `start` through the vertices of `through` (avoiding
// `blocked`) to a vertex of `target` or to a neighbour of one. Returns the
// route including `start`, or nullopt.
inline std::optional<Path> route_to(const Graph& g, Vertex start, const VertexSet& through,
                                    const std::vector<char>& blocked, const VertexSet& target) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.n()), -1);
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::deque<Vertex> queue{start};
  seen[start] = 1;
  const auto in = [](const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); };
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    Vertex finish = -1;
    if (in(target, x)) {
      finish = x;
    } else {
      for (Vertex z : g.neighbors(x)) {
        if (in(target, z)) {
          finish = z;
          break;
        }
      }
    }
    if (finish >= 0) {
      Path route;
      if (finish != x) route.push_back(finish);
      for (Vertex y = x; y >= 0; y = parent[y]) route.push_back(y);
      std::reverse(route.begin(), route.end());
      return route;
    }
    for (Vertex w : g.neighbors(x)) {
      if (!seen[w] && !blocked[w] && in(through, w)) {
        seen[w] = 1;
        parent[w] = x;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// A path meeting every element of the bramble. Keeps the path maximal in
/// elements hit and then minimal in length: an endpoint v always has a private
/// element X (one meeting the path only at v); an unhit element Z touches X,
/// so a route from v through X into Z extends the path. Among candidate
/// extensions the one hitting most elements wins, then the shorter, then the
/// lexicographically smaller vertex sequence.
inline Path hitting_path(const Bramble& b) {
  const Graph& g = b.host();
  const auto& elements = b.elements();
  if (elements.empty()) return {};
  detail::HitCounter counter(b);

  Vertex start = -1;
  std::size_t start_hits = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (counter.containing(v).size() > start_hits) {
      start = v;
      start_hits = counter.containing(v).size();
    }
  }
  Path p{start};

  for (;;) {
    detail::shorten(counter, p);
    const auto mult = counter.multiplicity(p);
    std::vector<std::size_t> unhit;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (mult[i] == 0) unhit.push_back(i);
    if (unhit.empty()) break;

    std::vector<char> on_path(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : p) on_path[v] = 1;

    std::optional<Path> best;
    std::size_t best_hits = 0;
    for (int side = 0; side < (p.size() > 1 ? 2 : 1); ++side) {
      const Vertex end = side == 0 ? p.back() : p.front();
      for (std::size_t x : counter.containing(end)) {
        if (mult[x] != 1) continue;  // not private to this endpoint
        for (std::size_t z : unhit) {
          auto route = detail::route_to(g, end, elements[x], on_path, elements[z]);
          if (!route) continue;
          Path candidate;
          if (side == 0) {
            candidate = p;
            candidate.insert(candidate.end(), route->begin() + 1, route->end());
          } else {
            candidate.assign(route->rbegin(), route->rend() - 1);
            candidate.insert(candidate.end(), p.begin(), p.end());
          }
          const std::size_t h = counter.hits(candidate);
          if (!best || h > best_hits ||
              (h == best_hits && (candidate.size() < best->size() ||
                                  (candidate.size() == best->size() && candidate < *best)))) {
            best = std::move(candidate);
            best_hits = h;
          }
        }
      }
    }
    if (!best) throw InternalError("no private element reaches an unhit element; input is not a bramble");
    p = std::move(*best);
  }
  if (counter.hits(p) != elements.size() || !is_path(g, p)) throw InternalError("hitting path check failed");
  return p;
}

/// Indices of the elements meeting `marked` and avoiding `forbidden`.
inline std::vector<std::size_t> sub_bramble_indices(const Bramble& b, const VertexSet& marked,
                                                    const VertexSet& forbidden) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& x = b.elements()[i];
    if (sets_intersect(x, marked) && !sets_intersect(x, forbidden)) out.push_back(i);
  }
  return out;
}

/// Does the sub-bramble of elements meeting `marked` and avoiding `forbidden`
/// have order at least k? Throws LimitError when the order cannot be decided
/// exactly.
inline bool sub_bramble_order_at_least(const Bramble& b, const VertexSet& marked, const VertexSet& forbidden, int k,
                                       std::size_t exact_limit = kDefaultExactLimit) {
  if (k <= 0) return true;
  const Bramble sub = b.subfamily(sub_bramble_indices(b, marked, forbidden));
  const OrderCertificate cert = bramble_order(sub, exact_limit);
  if (cert.exhaustive) return cert.order >= k;
  if (cert.lower_bound >= k) return true;
  if (cert.order < k) return false;
  throw LimitError("sub-bramble order undecided: between " + std::to_string(cert.lower_bound) + " and " +
                   std::to_string(cert.order));
}

struct Segmentation {
  std::vector<Path> spines;
  /// cuts[i] is t_{i+1}: spine i covers path positions [cuts[i-1], cuts[i]).
  std::vector<std::size_t> cuts;
};

/// Splits `p` into l consecutive sub-paths. Each cut point is the first
/// position at which the elements meeting the current segment, and avoiding
/// everything before it, reach order k.
inline Segmentation segment_path(const Bramble& b, const Path& p, int k, int l,
                                 std::size_t exact_limit = kDefaultExactLimit) {
  if (k < 1 || l < 1) throw PreconditionError("segment_path needs k >= 1 and l >= 1");
  if (!is_path(b.host(), p)) throw PreconditionError("segment_path input is not a path");
  if (!hits_all(b.elements(), p)) throw PreconditionError("path does not meet every bramble element");
  Segmentation out;
  std::size_t start = 0;
  for (int i = 0; i < l; ++i) {
    const VertexSet before = make_vertex_set({p.begin(), p.begin() + static_cast<std::ptrdiff_t>(start)});
    bool placed = false;
    for (std::size_t t = start + 1; t <= p.size(); ++t) {
      Path segment(p.begin() + static_cast<std::ptrdiff_t>(start), p.begin() + static_cast<std::ptrdiff_t>(t));
      if (sub_bramble_order_at_least(b, make_vertex_set(segment), before, k, exact_limit)) {
        out.spines.push_back(std::move(segment));
        out.cuts.push_back(t);
        start = t;
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw InsufficientOrder("bramble order too small: only " + std::to_string(i) + " of " + std::to_string(l) +
                              " segments of order " + std::to_string(k) + " fit on the path");
    }
  }
  return out;
}

struct MengerResult {
  /// Pairwise vertex-disjoint a-b paths, each with exactly its first vertex
  /// in a and its last in b.
  std::vector<Path> paths;
  /// Present when fewer than the requested number of paths exist: a vertex
  /// set of size paths.size() meeting every a-b path.
  std::optional<VertexSet> cut;
};

namespace detail {

// Unit vertex capacities via the split network: v_in = 2v, v_out = 2v + 1.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, const VertexSet& a, const VertexSet& b) : g_(g) {
    const int n = g.n();
    source_ = 2 * n;
    sink_ = 2 * n + 1;
    arcs_.resize(static_cast<std::size_t>(2 * n + 2));
    const int wide = n + 1;
    for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
      add(2 * u + 1, 2 * v, wide);
      add(2 * v + 1, 2 * u, wide);
    }
    for (Vertex v : a) add(source_, 2 * v, wide);
    for (Vertex v : b) add(2 * v + 1, sink_, wide);
  }

  bool augment() {
    std::vector<std::pair<int, int>> via(arcs_.size(), {-1, -1});
    std::deque<int> queue{source_};
    via[source_] = {source_, -1};
    while (!queue.empty() && via[sink_].first < 0) {
      const int x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < arcs_[x].size(); ++i) {
        const Arc& arc = arcs_[x][i];
        if (arc.cap > 0 && via[arc.to].first < 0) {
          via[arc.to] = {x, static_cast<int>(i)};
          queue.push_back(arc.to);
        }
      }
    }
    if (via[sink_].first < 0) return false;
    for (int y = sink_; y != source_;) {
      auto [x, i] = via[y];
      Arc& arc = arcs_[x][i];
      --arc.cap;
      ++arcs_[y][arc.rev].cap;
      y = x;
    }
    return true;
  }

  /// Walks every unit of flow from the source to the sink.
  std::vector<Path> decompose() {
    std::vector<Path> out;
    const auto take = [this](int node) {
      for (Arc& arc : arcs_[node]) {
        if (arc.forward && arc.capacity - arc.cap - arc.walked > 0) {
          ++arc.walked;
          return arc.to;
        }
      }
      return -1;
    };
    for (int node = take(source_); node >= 0; node = take(source_)) {
      Path walk;
      while (node != sink_) {
        if (node % 2 == 0) walk.push_back(node / 2);
        node = take(node);
        if (node < 0) throw InternalError("flow decomposition stalled");
      }
      out.push_back(std::move(walk));
    }
    return out;
  }

  /// Vertices whose in-copy is reachable from the source in the residual
  /// network but whose out-copy is not.
  VertexSet min_cut() const {
    std::vector<char> seen(arcs_.size(), 0);
    std::deque<int> queue{source_};
    seen[source_] = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (const Arc& arc : arcs_[x]) {
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = 1;
          queue.push_back(arc.to);
        }
      }
    }
    VertexSet cut;
    for (Vertex v = 0; v < g_.n(); ++v)
      if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
    return cut;
  }

 private:
  struct Arc {
    int to;
    int cap;
    std::size_t rev;
    bool forward;
    int capacity;
    int walked;  // flow units already assigned to a path
  };

  void add(int from, int to, int cap) {
    arcs_[from].push_back({to, cap, arcs_[to].size(), true, cap, 0});
    arcs_[to].push_back({from, 0, arcs_[from].size() - 1, false, 0, 0});
  }

  const Graph& g_;
  int source_ = 0;
  int sink_ = 0;
  std::vector<std::vector<Arc>> arcs_;
};

}  // namespace detail

/// Up to `limit` pairwise vertex-disjoint paths from a to b by unit-capacity
/// max flow. If fewer exist, `cut` holds a separator of matching size.
inline MengerResult menger_paths(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  require_in_range(g, a);
  require_in_range(g, b);
  const VertexSet sa = make_vertex_set(a);
  const VertexSet sb = make_vertex_set(b);
  if (sa.empty() || sb.empty()) throw PreconditionError("menger_paths needs non-empty endpoint sets");
  if (sets_intersect(sa, sb)) throw PreconditionError("menger_paths needs disjoint endpoint sets");

  detail::SplitFlow flow(g, sa, sb);
  std::size_t value = 0;
  while (value < limit && flow.augment()) ++value;

  MengerResult out;
  const auto in = [](const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); };
  for (Path walk : flow.decompose()) {
    // Keep the part between the last a-vertex before the first b-vertex.
    const auto first_b = std::find_if(walk.begin(), walk.end(), [&](Vertex v) { return in(sb, v); });
    walk.erase(first_b + 1, walk.end());
    const auto last_a = std::find_if(walk.rbegin(), walk.rend(), [&](Vertex v) { return in(sa, v); });
    walk.erase(walk.begin(), last_a.base() - 1);
    out.paths.push_back(std::move(walk));
  }
  std::sort(out.paths.begin(), out.paths.end());
  if (out.paths.size() < limit) out.cut = flow.min_cut();
  return out;
}

struct DisjointPaths {
  std::optional<std::vector<Path>> paths;
  /// Separator of size < k when `paths` is absent.
  VertexSet cut;
};

/// k vertex-disjoint a-b paths, or a vertex cut of size < k separating a from b.
inline DisjointPaths vertex_disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b, int k) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  if (k == 0) return {std::vector<Path>{}, {}};
  MengerResult r = menger_paths(g, a, b, static_cast<std::size_t>(k));
  if (r.paths.size() == static_cast<std::size_t>(k)) return {std::move(r.paths), {}};
  return {std::nullopt, std::move(*r.cut)};
}

/// Spine paths plus, for each pair i < j of spines, k disjoint linking paths
/// from spine i to spine j.
struct PathSystem {
  std::vector<Path> spines;
  std::map<std::pair<int, int>, std::vector<Path>> links;
  int k = 0;
  int l = 0;
};

inline Verdict check_path_system(const Graph& g, const PathSystem& ps) {
  const auto num = [](auto x) { return std::to_string(x); };
  if (ps.spines.size() != static_cast<std::size_t>(ps.l)) return Verdict::fail("expected " + num(ps.l) + " spines");
  std::vector<int> spine_of(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < ps.spines.size(); ++i) {
    if (auto v = check_path(g, ps.spines[i]); !v) return Verdict::fail("spine " + num(i) + ": " + v.reason);
    for (Vertex v : ps.spines[i]) {
      if (spine_of[v] >= 0) return Verdict::fail("spines " + num(spine_of[v]) + " and " + num(i) + " intersect");
      spine_of[v] = static_cast<int>(i);
    }
  }
  const std::size_t pairs = static_cast<std::size_t>(ps.l) * static_cast<std::size_t>(ps.l - 1) / 2;
  if (ps.links.size() != pairs) return Verdict::fail("expected " + num(pairs) + " link families");
  for (const auto& [key, family] : ps.links) {
    const auto [i, j] = key;
    const std::string tag = "links " + num(i) + "," + num(j);
    if (!(0 <= i && i < j && j < ps.l)) return Verdict::fail(tag + ": bad spine pair");
    if (family.size() != static_cast<std::size_t>(ps.k)) return Verdict::fail(tag + ": expected " + num(ps.k) + " paths");
    std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
    for (const Path& q : family) {
      if (auto v = check_path(g, q); !v) return Verdict::fail(tag + ": " + v.reason);
      if (spine_of[q.front()] != i || spine_of[q.back()] != j) return Verdict::fail(tag + ": wrong endpoints");
      for (std::size_t t = 1; t + 1 < q.size(); ++t) {
        if (spine_of[q[t]] == i || spine_of[q[t]] == j) return Verdict::fail(tag + ": interior meets its spines");
      }
      if (q.size() == 1) return Verdict::fail(tag + ": single-vertex link");
      for (Vertex v : q) {
        if (used[v]) return Verdict::fail(tag + ": paths not disjoint");
        used[v] = 1;
      }
    }
  }
  return Verdict::pass();
}

/// hitting path, segmentation into l spines of sub-bramble order k, then k
/// disjoint links between every pair of spines. The bramble must have order
/// at least k * l.
inline PathSystem many_paths(const Bramble& b, int k, int l, std::size_t exact_limit = kDefaultExactLimit) {
  const Graph& g = b.host();
  PathSystem ps;
  ps.k = k;
  ps.l = l;
  ps.spines = segment_path(b, hitting_path(b), k, l, exact_limit).spines;
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      const VertexSet a = make_vertex_set(ps.spines[i]);
      const VertexSet c = make_vertex_set(ps.spines[j]);
      DisjointPaths found = vertex_disjoint_paths(g, a, c, k);
      if (!found.paths) {
        std::string cut;
        for (Vertex v : found.cut) cut += " " + std::to_string(v);
        throw InternalError("spines " + std::to_string(i) + " and " + std::to_string(j) +
                            " separated by fewer than k vertices:" + cut);
      }
      ps.links[{i, j}] = std::move(*found.paths);
    }
  }
  if (auto v = check_path_system(g, ps); !v) throw InternalError("path system check failed: " + v.reason);
  return ps;
}

}  // namespace gridlike
