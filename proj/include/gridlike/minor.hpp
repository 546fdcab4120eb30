#pragma once

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gridlike/generators.hpp"
#include "gridlike/graph.hpp"

namespace gridlike {

/// Branch sets witnessing that `pattern` is a minor of `host`: branch_sets[i]
/// is the set of host vertices contracted onto pattern vertex i.
struct MinorModel {
  Graph pattern;
  Graph host;
  std::vector<VertexSet> branch_sets;
};

enum class ModelStatus {
  kValid,
  kStructuralMismatch,  // branch-set count differs from the pattern's order
  kEmptyBranchSet,
  kVertexOutOfRange,
  kOverlap,
  kDisconnected,
  kMissingEdge,
};

struct ModelCheck {
  ModelStatus status = ModelStatus::kValid;
  std::string detail;
  explicit operator bool() const { return status == ModelStatus::kValid; }
};

inline ModelCheck check_minor_model(const MinorModel& m) {
  const auto fail = [](ModelStatus s, std::string d) { return ModelCheck{s, std::move(d)}; };
  if (m.branch_sets.size() != static_cast<std::size_t>(m.pattern.n())) {
    return fail(ModelStatus::kStructuralMismatch,
                std::to_string(m.branch_sets.size()) + " branch sets for a pattern on " +
                    std::to_string(m.pattern.n()) + " vertices");
  }
  std::vector<int> owner(static_cast<std::size_t>(m.host.n()), -1);
  for (std::size_t i = 0; i < m.branch_sets.size(); ++i) {
    const auto& bs = m.branch_sets[i];
    if (bs.empty()) return fail(ModelStatus::kEmptyBranchSet, "branch set " + std::to_string(i) + " is empty");
    for (Vertex v : bs) {
      if (!m.host.contains(v)) {
        return fail(ModelStatus::kVertexOutOfRange,
                    "branch set " + std::to_string(i) + " has vertex " + std::to_string(v) + " out of range");
      }
      if (owner[v] >= 0 && owner[v] != static_cast<int>(i)) {
        return fail(ModelStatus::kOverlap, "branch sets " + std::to_string(owner[v]) + " and " +
                                               std::to_string(i) + " share vertex " + std::to_string(v));
      }
      owner[v] = static_cast<int>(i);
    }
    if (!is_connected_subset(m.host, make_vertex_set(bs))) {
      return fail(ModelStatus::kDisconnected, "branch set " + std::to_string(i) + " is not connected");
    }
  }
  std::set<std::pair<int, int>> realised;
  for (auto [u, v] : m.host.edges()) {
    if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) {
      realised.emplace(std::min(owner[u], owner[v]), std::max(owner[u], owner[v]));
    }
  }
  for (auto [a, b] : m.pattern.edges()) {
    if (!realised.contains({a, b})) {
      return fail(ModelStatus::kMissingEdge, "no host edge joins branch sets " + std::to_string(a) +
                                                 " and " + std::to_string(b));
    }
  }
  return {};
}

inline bool verify_minor_model(const MinorModel& m) { return static_cast<bool>(check_minor_model(m)); }

/// d(l): an upper bound on the degeneracy of graphs without a K_l minor.
class DegeneracyBound {
 public:
  enum class Kind { kMader, kScaled, kExplicit };

  /// 2^(l-2).
  static DegeneracyBound mader() { return DegeneracyBound(Kind::kMader, 0.0, 0); }
  /// ceil(c * l * sqrt(ln l)), at least 1.
  static DegeneracyBound scaled(double c) {
    if (!(c > 0.0)) throw InputError("scaled degeneracy bound needs c > 0");
    return DegeneracyBound(Kind::kScaled, c, 0);
  }
  /// The same user-supplied value for every l.
  static DegeneracyBound explicit_value(int d) {
    if (d < 1) throw InputError("explicit degeneracy bound must be >= 1");
    return DegeneracyBound(Kind::kExplicit, 0.0, d);
  }

  /// Accepts "mader", "scaled:<c>", "explicit:<d>" or a bare integer.
  static DegeneracyBound parse(std::string_view text) {
    if (text == "mader") return mader();
    auto number_after = [&](std::string_view prefix) { return text.substr(prefix.size()); };
    if (text.starts_with("scaled:")) {
      std::string rest(number_after("scaled:"));
      std::size_t used = 0;
      double c = 0;
      try {
        c = std::stod(rest, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != rest.size()) throw InputError("bad scaled bound: " + std::string(text));
      return scaled(c);
    }
    std::string_view digits = text.starts_with("explicit:") ? number_after("explicit:") : text;
    int d = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw InputError("unknown degeneracy bound: " + std::string(text));
    }
    return explicit_value(d);
  }

  int operator()(int l) const {
    if (l < 2) return 0;
    switch (kind_) {
      case Kind::kMader:
        if (l > 32) throw LimitError("Mader bound 2^(l-2) overflows for l > 32");
        return 1 << (l - 2);
      case Kind::kScaled:
        return std::max(1, static_cast<int>(std::ceil(c_ * l * std::sqrt(std::log(static_cast<double>(l))))));
      case Kind::kExplicit:
        return value_;
    }
    return 0;
  }

  Kind kind() const { return kind_; }

  std::string describe() const {
    switch (kind_) {
      case Kind::kMader: return "mader";
      case Kind::kScaled: return "scaled:" + std::to_string(c_);
      case Kind::kExplicit: return "explicit:" + std::to_string(value_);
    }
    return {};
  }

 private:
  DegeneracyBound(Kind k, double c, int v) : kind_(k), c_(c), value_(v) {}
  Kind kind_;
  double c_;
  int value_;
};

enum class SearchStatus { kFound, kProvenAbsent, kBudgetExhausted };

struct MinorSearch {
  SearchStatus status = SearchStatus::kProvenAbsent;
  std::optional<MinorModel> model;
  std::uint64_t nodes = 0;
  bool exhaustive() const { return status != SearchStatus::kBudgetExhausted; }
};

inline constexpr std::uint64_t kDefaultMinorBudget = 20'000'000;

namespace detail {

// Branch sets are chosen one at a time in increasing order of their smallest
// vertex. Each candidate set is a connected subset grown from that smallest
// vertex using only larger vertices, enumerated without repetition by the
// extension/exclusion scheme. A new set must touch every earlier set.
class CliqueMinorSearch {
 public:
  CliqueMinorSearch(std::vector<std::uint64_t> adj, int l, std::uint64_t budget)
      : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())), l_(l), budget_(budget) {}

  bool run() { return place(0, 0, 0); }
  bool out_of_budget() const { return out_of_budget_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::uint64_t>& sets() const { return sets_; }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  std::uint64_t at_or_above(int v) const {
    const std::uint64_t full = n_ == 64 ? ~std::uint64_t{0} : (bit(n_) - 1);
    return v >= 64 ? 0 : full & ~(bit(v) - 1);
  }

  bool place(int idx, std::uint64_t used, int floor) {
    if (idx == l_) return true;
    const int still_needed = l_ - idx;
    for (int v = floor; v < n_; ++v) {
      if (used & bit(v)) continue;
      const std::uint64_t allowed = ~used & at_or_above(v);
      if (std::popcount(allowed) < still_needed) break;
      std::uint64_t nbr = adj_[v];
      if (grow(bit(v), nbr & allowed & ~bit(v), 0, allowed, nbr, idx, used, v)) return true;
      if (out_of_budget_) return false;
    }
    return false;
  }

  bool grow(std::uint64_t set, std::uint64_t ext, std::uint64_t excluded, std::uint64_t allowed,
            std::uint64_t nbr, int idx, std::uint64_t used, int v) {
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    const int later = l_ - idx - 1;
    const std::uint64_t rest = allowed & ~set & at_or_above(v + 1);
    if (std::popcount(rest) < later) return false;
    bool touches_all = true;
    for (std::uint64_t prev : sets_) {
      if (!(nbr & prev)) {
        touches_all = false;
        break;
      }
    }
    if (touches_all) {
      sets_.push_back(set);
      if (place(idx + 1, used | set, v + 1)) return true;
      sets_.pop_back();
      if (out_of_budget_) return false;
    }
    std::uint64_t tried = 0;
    for (std::uint64_t pending = ext; pending; pending &= pending - 1) {
      const int u = std::countr_zero(pending);
      const std::uint64_t skip = excluded | tried;
      const std::uint64_t grown = set | bit(u);
      const std::uint64_t next_ext = ((ext | (adj_[u] & allowed)) & ~grown & ~skip);
      if (grow(grown, next_ext, skip, allowed, nbr | adj_[u], idx, used, v)) return true;
      if (out_of_budget_) return false;
      tried |= bit(u);
    }
    return false;
  }

  std::vector<std::uint64_t> adj_;
  int n_;
  int l_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<std::uint64_t> sets_;
};

}  // namespace detail

/// Exact search for a K_l minor. Supports hosts with at most 64 vertices.
/// `budget` caps the number of candidate branch sets examined.
inline MinorSearch find_minor_exact(const Graph& g, int l, std::uint64_t budget = kDefaultMinorBudget) {
  if (l < 1) throw PreconditionError("find_minor_exact needs l >= 1");
  if (g.n() > 64) throw LimitError("exact minor search supports at most 64 vertices");
  MinorSearch out;
  const auto pairs = static_cast<std::size_t>(l) * static_cast<std::size_t>(l - 1) / 2;
  if (g.n() < l || g.m() < pairs) return out;

  // Relabel by decreasing degree so dense regions are tried first.
  std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<std::uint64_t> adj(order.size(), 0);
  for (auto [u, v] : g.edges()) {
    adj[pos[u]] |= std::uint64_t{1} << pos[v];
    adj[pos[v]] |= std::uint64_t{1} << pos[u];
  }

  detail::CliqueMinorSearch search(std::move(adj), l, budget);
  const bool found = search.run();
  out.nodes = search.nodes();
  if (found) {
    MinorModel model{complete_graph(l), g, {}};
    for (std::uint64_t mask : search.sets()) {
      std::vector<Vertex> bs;
      for (; mask; mask &= mask - 1) bs.push_back(order[std::countr_zero(mask)]);
      model.branch_sets.push_back(make_vertex_set(std::move(bs)));
    }
    out.status = SearchStatus::kFound;
    out.model = std::move(model);
  } else if (search.out_of_budget()) {
    out.status = SearchStatus::kBudgetExhausted;
  }
  return out;
}

namespace detail {

// A minor of the host under construction: each live vertex carries the set of
// host vertices contracted into it.
struct ContractedGraph {
  std::vector<VertexSet> bag;
  std::vector<std::set<int>> adj;
  std::vector<char> alive;
  std::size_t edges = 0;
  int live = 0;

  static ContractedGraph from(const Graph& g, std::span<const Vertex> vs) {
    ContractedGraph h;
    std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
    h.bag.resize(vs.size());
    h.adj.resize(vs.size());
    h.alive.assign(vs.size(), 1);
    h.live = static_cast<int>(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) h.bag[i] = {vs[i]};
    for (auto [u, v] : g.edges()) {
      if (index[u] >= 0 && index[v] >= 0) {
        h.adj[index[u]].insert(index[v]);
        h.adj[index[v]].insert(index[u]);
        ++h.edges;
      }
    }
    return h;
  }

  /// Induced on the live vertices in `keep`, bags carried over.
  ContractedGraph induced(const std::set<int>& keep) const {
    ContractedGraph h;
    std::map<int, int> index;
    for (int v : keep) {
      index[v] = static_cast<int>(h.bag.size());
      h.bag.push_back(bag[v]);
    }
    h.adj.resize(h.bag.size());
    h.alive.assign(h.bag.size(), 1);
    h.live = static_cast<int>(h.bag.size());
    for (int v : keep) {
      for (int w : adj[v]) {
        if (w > v && keep.contains(w)) {
          h.adj[index[v]].insert(index[w]);
          h.adj[index[w]].insert(index[v]);
          ++h.edges;
        }
      }
    }
    return h;
  }

  void remove_vertex(int v) {
    for (int w : adj[v]) adj[w].erase(v);
    edges -= adj[v].size();
    adj[v].clear();
    alive[v] = 0;
    --live;
  }

  void remove_edge(int u, int v) {
    adj[u].erase(v);
    adj[v].erase(u);
    --edges;
  }

  /// Merge v into u along the edge uv.
  void contract(int u, int v) {
    remove_edge(u, v);
    for (int w : adj[v]) {
      adj[w].erase(v);
      if (adj[u].insert(w).second) {
        adj[w].insert(u);
      } else {
        --edges;
      }
    }
    adj[v].clear();
    alive[v] = 0;
    --live;
    VertexSet merged;
    std::set_union(bag[u].begin(), bag[u].end(), bag[v].begin(), bag[v].end(), std::back_inserter(merged));
    bag[u] = std::move(merged);
    bag[v].clear();
  }

  std::size_t common_neighbours(int u, int v) const {
    std::size_t count = 0;
    for (int w : adj[u]) count += adj[v].contains(w);
    return count;
  }
};

inline std::optional<std::vector<VertexSet>> cycle_triangle(const ContractedGraph& h) {
  // Any cycle, split into three consecutive arcs.
  const auto size = h.bag.size();
  std::vector<int> parent(size, -2), depth(size, 0);
  for (std::size_t root = 0; root < size; ++root) {
    if (!h.alive[root] || parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<std::pair<int, std::set<int>::const_iterator>> stack{{static_cast<int>(root), h.adj[root].begin()}};
    while (!stack.empty()) {
      auto& [u, it] = stack.back();
      if (it == h.adj[u].end()) {
        stack.pop_back();
        continue;
      }
      const int w = *it++;
      if (w == parent[u]) continue;
      if (parent[w] != -2) {
        if (depth[w] >= depth[u]) continue;
        std::vector<int> cycle;
        for (int x = u; x != w; x = parent[x]) cycle.push_back(x);
        cycle.push_back(w);
        std::vector<VertexSet> sets{h.bag[cycle[0]], h.bag[cycle[1]], {}};
        for (std::size_t i = 2; i < cycle.size(); ++i) {
          sets[2].insert(sets[2].end(), h.bag[cycle[i]].begin(), h.bag[cycle[i]].end());
        }
        sets[2] = make_vertex_set(std::move(sets[2]));
        return sets;
      }
      parent[w] = u;
      depth[w] = depth[u] + 1;
      stack.emplace_back(w, h.adj[w].begin());
    }
  }
  return std::nullopt;
}

// Mader's argument made constructive. With c = 2^(l-3), reduce to a minor that
// still has at least c * |V| edges but loses that property under any single
// vertex deletion, edge deletion or contraction. Then every edge lies in at
// least c triangles, so the neighbourhood of any vertex meets the density
// condition for l - 1, and the vertex itself completes the clique.
inline std::optional<std::vector<VertexSet>> mader_clique(ContractedGraph h, int l) {
  if (l == 1) {
    for (std::size_t v = 0; v < h.bag.size(); ++v)
      if (h.alive[v]) return std::vector<VertexSet>{h.bag[v]};
    return std::nullopt;
  }
  if (l == 2) {
    for (std::size_t v = 0; v < h.bag.size(); ++v)
      if (h.alive[v] && !h.adj[v].empty()) return std::vector<VertexSet>{h.bag[v], h.bag[*h.adj[v].begin()]};
    return std::nullopt;
  }
  if (l == 3) return cycle_triangle(h);

  const std::size_t c = std::size_t{1} << (l - 3);
  const auto dense = [&](std::size_t e, std::size_t n) { return e >= c * n; };
  if (!dense(h.edges, static_cast<std::size_t>(h.live))) return std::nullopt;

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < h.bag.size(); ++v) {
      if (h.alive[v] && h.live > 1 &&
          dense(h.edges - h.adj[v].size(), static_cast<std::size_t>(h.live - 1))) {
        h.remove_vertex(static_cast<int>(v));
        changed = true;
      }
    }
    for (std::size_t u = 0; u < h.bag.size(); ++u) {
      for (auto it = h.adj[u].begin(); it != h.adj[u].end();) {
        const int v = *it++;
        if (v < static_cast<int>(u)) continue;
        if (dense(h.edges - 1, static_cast<std::size_t>(h.live))) {
          h.remove_edge(static_cast<int>(u), v);
          changed = true;
          it = h.adj[u].upper_bound(v);
        }
      }
    }
    for (std::size_t u = 0; u < h.bag.size(); ++u) {
      for (auto it = h.adj[u].begin(); it != h.adj[u].end();) {
        const int v = *it++;
        if (v < static_cast<int>(u)) continue;
        const std::size_t lost = 1 + h.common_neighbours(static_cast<int>(u), v);
        if (h.edges >= lost && dense(h.edges - lost, static_cast<std::size_t>(h.live - 1))) {
          h.contract(static_cast<int>(u), v);
          changed = true;
          it = h.adj[u].begin();
        }
      }
    }
  }

  int pick = -1;
  for (std::size_t v = 0; v < h.bag.size(); ++v) {
    if (h.alive[v] && (pick < 0 || h.adj[v].size() < h.adj[pick].size())) pick = static_cast<int>(v);
  }
  if (pick < 0) return std::nullopt;
  auto rest = mader_clique(h.induced(h.adj[pick]), l - 1);
  if (!rest) return std::nullopt;
  rest->push_back(h.bag[pick]);
  return rest;
}

}  // namespace detail

enum class DenseStatus { kFound, kBelowBound, kFallbackFailed };

struct DenseMinorResult {
  DenseStatus status = DenseStatus::kFallbackFailed;
  std::optional<MinorModel> model;
  bool used_exact_fallback = false;
};

struct DenseMinorOptions {
  /// Refuse to search when degeneracy(g) <= bound(l).
  bool enforce_bound = true;
  std::uint64_t exact_budget = kDefaultMinorBudget;
};

/// K_l minor in a graph whose degeneracy exceeds bound(l). Contracts inside
/// the densest core first; if that does not produce a model, falls back to
/// the exact search (hosts of at most 64 vertices). Returned models are
/// always verified.
inline DenseMinorResult find_minor_dense(const Graph& g, int l, const DegeneracyBound& bound,
                                         DenseMinorOptions opts = {}) {
  if (l < 1) throw PreconditionError("find_minor_dense needs l >= 1");
  DenseMinorResult out;
  const Degeneracy deg = degeneracy(g);
  if (opts.enforce_bound && deg.value <= bound(l)) {
    out.status = DenseStatus::kBelowBound;
    return out;
  }

  if (auto sets = detail::mader_clique(detail::ContractedGraph::from(g, deg.core), l)) {
    MinorModel model{complete_graph(l), g, std::move(*sets)};
    if (!verify_minor_model(model)) throw InternalError("contraction produced an invalid clique model");
    out.status = DenseStatus::kFound;
    out.model = std::move(model);
    return out;
  }

  if (g.n() <= 64) {
    out.used_exact_fallback = true;
    MinorSearch exact = find_minor_exact(g, l, opts.exact_budget);
    if (exact.model) {
      out.status = DenseStatus::kFound;
      out.model = std::move(exact.model);
      return out;
    }
  }
  out.status = DenseStatus::kFallbackFailed;
  return out;
}

}  // namespace gridlike
