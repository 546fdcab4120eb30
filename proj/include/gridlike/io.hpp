#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gridlike/bramble.hpp"
#include "gridlike/extraction.hpp"
#include "gridlike/graph.hpp"
#include "gridlike/grid_like_minor.hpp"
#include "gridlike/minor.hpp"
#include "gridlike/random.hpp"
#include "gridlike/transversal.hpp"

namespace gridlike::io {

using nlohmann::json;

namespace detail {

inline long long parse_int(const std::string& token, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw FormatError("line " + std::to_string(line) + ": expected an integer, got '" + token + "'");
  }
  return value;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline Graph build(long long n, const std::vector<std::pair<long long, long long>>& raw, const std::vector<int>& lines) {
  if (n < 0 || n > (1LL << 30)) throw FormatError("vertex count out of range");
  std::vector<Edge> edges;
  std::map<Edge, int> seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [u, v] = raw[i];
    const std::string where = "line " + std::to_string(lines[i]);
    if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError(where + ": vertex out of range");
    if (u == v) throw FormatError(where + ": self-loop at " + std::to_string(u));
    const Edge e = std::minmax(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (auto [it, fresh] = seen.emplace(e, lines[i]); !fresh) {
      throw FormatError(where + ": edge " + std::to_string(e.first) + " " + std::to_string(e.second) +
                        " already declared on line " + std::to_string(it->second));
    }
    edges.push_back(e);
  }
  return Graph(static_cast<Vertex>(n), edges);
}

}  // namespace detail

/// `u v` per line, 0-based. `#` starts a comment. An optional first data line
/// holding a single integer gives the vertex count (for isolated vertices);
/// otherwise it is one more than the largest vertex.
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::pair<long long, long long>> raw;
  std::vector<int> lines;
  long long n = -1;
  bool first = true;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto t = detail::tokens(line);
    if (t.empty()) continue;
    if (first && t.size() == 1) {
      n = detail::parse_int(t[0], line_no);
      first = false;
      continue;
    }
    first = false;
    if (t.size() != 2) throw FormatError("line " + std::to_string(line_no) + ": expected 'u v'");
    raw.emplace_back(detail::parse_int(t[0], line_no), detail::parse_int(t[1], line_no));
    lines.push_back(line_no);
  }
  if (n < 0) {
    n = 0;
    for (auto [u, v] : raw) n = std::max({n, u + 1, v + 1});
  }
  return detail::build(n, raw, lines);
}

/// DIMACS: `c` comments, one `p edge N M` line, then `e u v` lines, 1-based.
inline Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::pair<long long, long long>> raw;
  std::vector<int> lines;
  long long n = -1;
  long long m = -1;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto t = detail::tokens(line);
    if (t.empty() || t[0] == "c") continue;
    const std::string where = "line " + std::to_string(line_no);
    if (t[0] == "p") {
      if (n >= 0) throw FormatError(where + ": second problem line");
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "col")) throw FormatError(where + ": expected 'p edge N M'");
      n = detail::parse_int(t[2], line_no);
      m = detail::parse_int(t[3], line_no);
    } else if (t[0] == "e") {
      if (n < 0) throw FormatError(where + ": edge before problem line");
      if (t.size() != 3) throw FormatError(where + ": expected 'e u v'");
      raw.emplace_back(detail::parse_int(t[1], line_no) - 1, detail::parse_int(t[2], line_no) - 1);
      lines.push_back(line_no);
    } else {
      throw FormatError(where + ": unknown line type '" + t[0] + "'");
    }
  }
  if (n < 0) throw FormatError("missing problem line");
  if (m != static_cast<long long>(raw.size())) {
    throw FormatError("problem line declares " + std::to_string(m) + " edges, found " + std::to_string(raw.size()));
  }
  return detail::build(n, raw, lines);
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

// JSON ------------------------------------------------------------------------

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

template <typename T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace detail

inline json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", edges}};
}

/// Reads the `n` and `edges` fields of any object carrying a graph.
inline Graph graph_from_json(const json& j) {
  const auto n = detail::get<long long>(j, "n");
  const auto raw_edges = detail::get<std::vector<std::vector<long long>>>(j, "edges");
  std::vector<std::pair<long long, long long>> raw;
  std::vector<int> lines;
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    if (raw_edges[i].size() != 2) throw FormatError("edge " + std::to_string(i) + " is not a pair");
    raw.emplace_back(raw_edges[i][0], raw_edges[i][1]);
    lines.push_back(static_cast<int>(i));
  }
  try {
    return detail::build(n, raw, lines);
  } catch (const FormatError& e) {
    std::string what = e.what();
    if (what.rfind("line ", 0) == 0) what = "edge " + what.substr(5);
    throw FormatError(what);
  }
}

/// Graph from text: JSON when it starts with `{`, DIMACS when it has a
/// `p` line, otherwise an edge list.
inline Graph parse_graph(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto t = detail::tokens(line);
    if (!t.empty() && t[0] == "p") return parse_dimacs(text);
  }
  return parse_edge_list(text);
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::vector<VertexSet> sets_from_json(const json& j, const char* key) {
  auto raw = detail::get<std::vector<std::vector<Vertex>>>(j, key);
  return {raw.begin(), raw.end()};
}

inline json order_json(const OrderCertificate& c) {
  return {{"order", c.order}, {"hitting_set", c.hitting_set}, {"exhaustive", c.exhaustive},
          {"lower_bound", c.lower_bound}};
}

inline json bramble_json(const Bramble& b, const OrderCertificate* cert = nullptr) {
  json j = graph_json(b.host());
  j["elements"] = b.elements();
  if (cert) j["certificate"] = order_json(*cert);
  return j;
}

/// Unchecked host and elements of a bramble file.
struct RawBramble {
  Graph host;
  std::vector<VertexSet> elements;
  std::optional<OrderCertificate> certificate;
};

inline RawBramble raw_bramble_from_json(const json& j) {
  RawBramble out{graph_from_json(j), sets_from_json(j, "elements"), std::nullopt};
  if (j.contains("certificate")) {
    const json& c = j["certificate"];
    OrderCertificate cert;
    cert.order = detail::get<int>(c, "order");
    cert.hitting_set = detail::get<VertexSet>(c, "hitting_set");
    cert.exhaustive = detail::get<bool>(c, "exhaustive");
    cert.lower_bound = detail::get<int>(c, "lower_bound");
    out.certificate = cert;
  }
  return out;
}

inline Bramble bramble_from_json(const json& j) {
  RawBramble raw = raw_bramble_from_json(j);
  return Bramble(std::move(raw.host), std::move(raw.elements));
}

inline json path_system_json(const PathSystem& ps) {
  json links = json::object();
  for (const auto& [key, family] : ps.links) links[std::to_string(key.first) + "," + std::to_string(key.second)] = family;
  return {{"spines", ps.spines}, {"links", links}, {"k", ps.k}, {"l", ps.l}};
}

inline PathSystem path_system_from_json(const json& j) {
  PathSystem ps;
  ps.spines = detail::get<std::vector<Path>>(j, "spines");
  ps.k = detail::get<int>(j, "k");
  ps.l = detail::get<int>(j, "l");
  const json& links = detail::field(j, "links");
  if (!links.is_object()) throw FormatError("field 'links' must be an object");
  for (const auto& [key, family] : links.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw FormatError("link key '" + key + "' is not 'i,j'");
    const int i = static_cast<int>(detail::parse_int(key.substr(0, comma), 0));
    const int jj = static_cast<int>(detail::parse_int(key.substr(comma + 1), 0));
    try {
      ps.links[{i, jj}] = family.get<std::vector<Path>>();
    } catch (const json::exception& e) {
      throw FormatError("links '" + key + "': " + e.what());
    }
  }
  return ps;
}

inline json coloured_graph_json(const ColouredGraph& cg) {
  json j = graph_json(cg.graph());
  j["classes"] = cg.classes();
  return j;
}

inline ColouredGraph coloured_graph_from_json(const json& j) {
  return ColouredGraph(graph_from_json(j), sets_from_json(j, "classes"));
}

inline json transversal_json(const Transversal& t, std::uint64_t seed, std::uint64_t rounds) {
  return {{"vertices", t.vertices}, {"rng", std::string(kRngName)}, {"seed", seed}, {"rounds", rounds}};
}

inline Transversal transversal_from_json(const json& j) {
  return Transversal{detail::get<std::vector<Vertex>>(j, "vertices")};
}

inline json glm_json(const GridLikeMinor& glm) {
  json j = graph_json(glm.host);
  j["paths"] = glm.paths;
  j["sideA"] = glm.side_a;
  j["sideB"] = glm.side_b;
  j["model"] = {{"pattern_l", glm.order}, {"branch_sets", glm.branch_sets}};
  return j;
}

inline GridLikeMinor glm_from_json(const json& j) {
  GridLikeMinor glm;
  glm.host = graph_from_json(j);
  glm.paths = detail::get<std::vector<Path>>(j, "paths");
  glm.side_a = detail::get<std::vector<int>>(j, "sideA");
  glm.side_b = detail::get<std::vector<int>>(j, "sideB");
  const json& model = detail::field(j, "model");
  glm.order = detail::get<int>(model, "pattern_l");
  glm.branch_sets = sets_from_json(model, "branch_sets");
  return glm;
}

inline json minor_model_json(const MinorModel& m) {
  return {{"pattern", graph_json(m.pattern)}, {"host", graph_json(m.host)}, {"branch_sets", m.branch_sets}};
}

inline MinorModel minor_model_from_json(const json& j) {
  return MinorModel{graph_from_json(detail::field(j, "pattern")), graph_from_json(detail::field(j, "host")),
                    sets_from_json(j, "branch_sets")};
}

// DOT -------------------------------------------------------------------------

inline constexpr const char* kPalette[] = {"red",    "blue",      "darkgreen", "orange", "purple",
                                           "brown",  "magenta",   "cyan4",     "gold3",  "gray40"};

inline std::string graph_dot(const Graph& g, const std::string& name = "G") {
  std::string out = "graph " + name + " {\n";
  for (Vertex v = 0; v < g.n(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

/// Host graph in grey with each path drawn as a chain in its own colour.
inline std::string glm_dot(const GridLikeMinor& glm) {
  std::string out = "graph glm {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < glm.host.n(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : glm.host.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + " [color=gray80];\n";
  for (std::size_t p = 0; p < glm.paths.size(); ++p) {
    const std::string colour = kPalette[p % std::size(kPalette)];
    const Path& path = glm.paths[p];
    if (path.size() == 1) {
      out += "  " + std::to_string(path[0]) + " [color=" + colour + ", penwidth=2];\n";
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      out += "  " + std::to_string(path[i]) + " -- " + std::to_string(path[i + 1]) + " [color=" + colour +
             ", penwidth=2, label=\"P" + std::to_string(p) + "\"];\n";
    }
  }
  return out + "}\n";
}

/// Host graph with branch-set vertices filled by branch set.
inline std::string minor_model_dot(const MinorModel& m) {
  std::string out = "graph model {\n  node [shape=circle, style=filled, fillcolor=white];\n";
  for (std::size_t i = 0; i < m.branch_sets.size(); ++i)
    for (Vertex v : m.branch_sets[i])
      out += "  " + std::to_string(v) + " [fillcolor=" + kPalette[i % std::size(kPalette)] + "];\n";
  for (auto [u, v] : m.host.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

}  // namespace gridlike::io
