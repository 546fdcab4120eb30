// glmtool: generators, grid-like-minor extraction, certificate verification
// and transversal sweeps on the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gridlike/gridlike.hpp"
#include "gridlike/io.hpp"

namespace {

using namespace gridlike;
using io::json;

enum Exit : int {
  kOk = 0,
  kInvalid = 1,
  kPrecondition = 2,
  kRetryable = 3,
  kUsage = 64,
  kFormat = 65,
  kSoftware = 70,
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

std::string dump(const json& j) { return j.dump() + "\n"; }

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GLM_SEED")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("GLM_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

// gen ------------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  int l = 3;
  int rows = 0, cols = 0;
  int r = 3, d = 1, n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string format = "edges";
  std::string output;
};

std::string format_graph(const Graph& g, const std::string& format) {
  if (format == "json") return dump(io::graph_json(g));
  if (format == "dimacs") return io::to_dimacs(g);
  return io::to_edge_list(g);
}

int run_gen(const GenArgs& a) {
  if (a.kind == "grid") {
    if (a.l < 1 && (a.rows < 1 || a.cols < 1)) throw UsageError("grid needs --l >= 1 or --rows/--cols");
    const Graph g = a.rows > 0 ? grid_graph(a.rows, a.cols > 0 ? a.cols : a.rows) : grid_graph(a.l);
    write_output(a.output, format_graph(g, a.format));
  } else if (a.kind == "crosses") {
    if (a.l < 1) throw UsageError("crosses needs --l >= 1");
    write_output(a.output, dump(io::bramble_json(crosses_bramble(a.l))));
  } else if (a.kind == "counterexample") {
    const ColouredGraph cg = counterexample_graph(a.r, a.d, a.n > 0 ? std::optional<int>(a.n) : std::nullopt);
    write_output(a.output, dump(io::coloured_graph_json(cg)));
  } else if (a.kind == "random") {
    if (a.n < 0 || a.p < 0.0 || a.p > 1.0) throw UsageError("random needs --n >= 0 and 0 <= --p <= 1");
    Rng rng(a.seed_given ? a.seed : default_seed());
    write_output(a.output, format_graph(random_graph(a.n, a.p, rng), a.format));
  } else {
    throw UsageError("unknown kind " + a.kind);
  }
  return kOk;
}

// find-glm -------------------------------------------------------------------

struct FindArgs {
  std::string graph, bramble, output, dot, dbound = "mader";
  int l = 3;
  int k = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::uint64_t max_rounds = 0;
};

int run_find(const FindArgs& a) {
  const Bramble b = io::bramble_from_json(io::parse_json(read_file(a.bramble)));
  if (!a.graph.empty() && !(io::parse_graph(read_file(a.graph)) == b.host())) {
    throw PreconditionError("graph file does not match the bramble's host graph");
  }
  const DegeneracyBound bound = DegeneracyBound::parse(a.dbound);
  FindGlmOptions opts;
  if (a.k > 0) opts.k_override = a.k;
  opts.seed = a.seed_given ? a.seed : default_seed();
  if (a.max_rounds > 0) opts.max_rounds = a.max_rounds;
  const GlmResult r = find_glm(b, a.l, bound, opts);
  if (auto v = check_glm(r.glm); !v) {
    std::cerr << "internal: produced grid-like-minor fails verification: " << v.reason << "\n";
    return kSoftware;
  }
  write_output(a.output, dump(io::glm_json(r.glm)));
  if (!a.dot.empty()) write_output(a.dot, io::glm_dot(r.glm));
  std::cerr << "grid-like-minor of order " << r.glm.order << " via "
            << (r.branch == GlmResult::Branch::kTransversal ? "transversal" : "dense pair") << " branch, "
            << r.rounds << " resampling rounds\n";
  return kOk;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string kind, file, coloured;
};

int report(const std::string& kind, bool valid, const std::string& reason, json extra = json::object()) {
  json out = {{"kind", kind}, {"valid", valid}};
  if (!valid) out["reason"] = reason;
  out.update(extra);
  std::cout << dump(out);
  if (!valid) std::cerr << kind << " invalid: " << reason << "\n";
  return valid ? kOk : kInvalid;
}

int run_verify(const VerifyArgs& a) {
  const json j = io::parse_json(read_file(a.file));
  if (a.kind == "glm") {
    const GridLikeMinor glm = io::glm_from_json(j);
    const Verdict v = check_glm(glm);
    return report("glm", v.ok, v.reason, {{"order", glm.order}});
  }
  if (a.kind == "bramble") {
    const io::RawBramble raw = io::raw_bramble_from_json(j);
    const BrambleCheck check = check_bramble(raw.host, raw.elements);
    if (!check) return report("bramble", false, check.reason, {{"witness", check.witness}});
    if (raw.certificate) {
      const OrderCertificate& c = *raw.certificate;
      if (!hits_all(raw.elements, c.hitting_set)) return report("bramble", false, "hitting set misses an element");
      if (static_cast<int>(make_vertex_set(c.hitting_set).size()) != c.order) {
        return report("bramble", false, "hitting set size differs from the claimed order");
      }
      if (c.lower_bound > c.order) return report("bramble", false, "lower bound exceeds the order");
      if (c.exhaustive) {
        const OrderCertificate fresh = minimum_hitting_set(raw.elements);
        if (fresh.exhaustive && fresh.order != c.order) {
          return report("bramble", false, "claimed order " + std::to_string(c.order) + " but the minimum is " +
                                              std::to_string(fresh.order));
        }
      }
      return report("bramble", true, "", {{"order", c.order}});
    }
    return report("bramble", true, "");
  }
  if (a.kind == "minor-model") {
    const ModelCheck check = check_minor_model(io::minor_model_from_json(j));
    return report("minor-model", static_cast<bool>(check), check.detail);
  }
  if (a.kind == "transversal") {
    if (a.coloured.empty()) throw UsageError("verify transversal needs --coloured");
    const ColouredGraph cg = io::coloured_graph_from_json(io::parse_json(read_file(a.coloured)));
    const Verdict v = check_transversal(cg, io::transversal_from_json(j));
    return report("transversal", v.ok, v.reason);
  }
  throw UsageError("unknown certificate kind " + a.kind);
}

// product-minor --------------------------------------------------------------

struct ProductArgs {
  std::string glm, graph, output, dot;
};

int run_product(const ProductArgs& a) {
  const GridLikeMinor glm = io::glm_from_json(io::parse_json(read_file(a.glm)));
  const Graph g = a.graph.empty() ? glm.host : io::parse_graph(read_file(a.graph));
  if (auto v = check_glm(glm); !v) {
    std::cerr << "glm invalid: " << v.reason << "\n";
    return kInvalid;
  }
  const MinorModel m = product_complete_minor(g, glm);
  write_output(a.output, dump(io::minor_model_json(m)));
  if (!a.dot.empty()) write_output(a.dot, io::minor_model_dot(m));
  return kOk;
}

// transversal-sweep ----------------------------------------------------------

struct SweepArgs {
  int r = 2, d = 1, nmin = 1, nmax = 8, trials = 10;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::uint64_t max_rounds = 10000;
  std::string output;
};

int run_sweep(const SweepArgs& a) {
  if (a.r < 2 || a.d < 0 || a.nmin < 1 || a.nmax < a.nmin || a.trials < 0) {
    throw UsageError("sweep needs r >= 2, d >= 0, 1 <= nmin <= nmax, trials >= 0");
  }
  const std::uint64_t base = a.seed_given ? a.seed : default_seed();
  std::string csv = "r,d,n,seed,algorithm,rounds,found\n";
  for (int n = a.nmin; n <= a.nmax; ++n) {
    for (int t = 0; t < a.trials; ++t) {
      const std::uint64_t seed = base + static_cast<std::uint64_t>(t);
      Rng rng(seed);
      const ColouredGraph cg = random_degenerate_coloured(a.r, a.d, n, rng);
      const std::string prefix = std::to_string(a.r) + "," + std::to_string(a.d) + "," + std::to_string(n) + "," +
                                 std::to_string(seed) + ",";
      const ResampleOutcome lll = n >= lll_threshold(a.r, a.d) ? transversal_lll(cg, a.d, seed, a.max_rounds)
                                                               : moser_tardos(cg, seed, a.max_rounds);
      csv += prefix + "lll," + std::to_string(lll.rounds) + "," + (lll.transversal ? "1" : "0") + "\n";
      const bool greedy = transversal_greedy(cg, a.d).has_value();
      csv += prefix + "greedy,0," + (greedy ? "1" : "0") + "\n";
    }
  }
  write_output(a.output, csv);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid-like-minor toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph, bramble or coloured graph");
  gen_cmd->add_option("kind", gen.kind, "grid | crosses | counterexample | random")
      ->required()
      ->check(CLI::IsMember({"grid", "crosses", "counterexample", "random"}));
  gen_cmd->add_option("--l", gen.l, "Grid side");
  gen_cmd->add_option("--rows", gen.rows, "Grid rows");
  gen_cmd->add_option("--cols", gen.cols, "Grid columns");
  gen_cmd->add_option("--r", gen.r, "Number of colour classes");
  gen_cmd->add_option("--d", gen.d, "Degeneracy");
  gen_cmd->add_option("--n", gen.n, "Vertex count (random) or class size (counterexample)");
  gen_cmd->add_option("--p", gen.p, "Edge probability");
  auto* gen_seed = gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--format", gen.format, "Graph output: edges | dimacs | json")
      ->check(CLI::IsMember({"edges", "dimacs", "json"}));
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  FindArgs find;
  auto* find_cmd = app.add_subcommand("find-glm", "Extract a grid-like-minor from a bramble");
  find_cmd->add_option("--bramble", find.bramble, "Bramble JSON")->required()->check(CLI::ExistingFile);
  find_cmd->add_option("--graph", find.graph, "Host graph; must match the bramble's host")->check(CLI::ExistingFile);
  find_cmd->add_option("--l", find.l, "Order of the grid-like-minor")->required();
  find_cmd->add_option("--k", find.k, "Linking paths per spine pair (default: the guaranteed threshold)");
  find_cmd->add_option("--dbound", find.dbound, "mader | scaled:C | explicit:D");
  auto* find_seed = find_cmd->add_option("--seed", find.seed, "Random seed (default GLM_SEED or 0)");
  find_cmd->add_option("--max-rounds", find.max_rounds, "Resampling round cap");
  find_cmd->add_option("-o,--output", find.output, "Output file (default stdout)");
  find_cmd->add_option("--dot", find.dot, "Also write a DOT rendering here");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate");
  verify_cmd->add_option("kind", verify.kind, "glm | bramble | minor-model | transversal")
      ->required()
      ->check(CLI::IsMember({"glm", "bramble", "minor-model", "transversal"}));
  verify_cmd->add_option("file", verify.file, "Certificate JSON")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--coloured", verify.coloured, "Coloured graph JSON (transversal only)")
      ->check(CLI::ExistingFile);

  ProductArgs product;
  auto* product_cmd = app.add_subcommand("product-minor", "Complete-minor model in G x K2 from a grid-like-minor");
  product_cmd->add_option("--glm", product.glm, "Grid-like-minor JSON")->required()->check(CLI::ExistingFile);
  product_cmd->add_option("--graph", product.graph, "Host graph (default: the GLM's host)")->check(CLI::ExistingFile);
  product_cmd->add_option("-o,--output", product.output, "Output file (default stdout)");
  product_cmd->add_option("--dot", product.dot, "Also write a DOT rendering here");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("transversal-sweep", "CSV of transversal runs over class sizes");
  sweep_cmd->add_option("--r", sweep.r, "Number of classes");
  sweep_cmd->add_option("--d", sweep.d, "Degeneracy of each class pair");
  sweep_cmd->add_option("--nmin", sweep.nmin, "Smallest class size");
  sweep_cmd->add_option("--nmax", sweep.nmax, "Largest class size");
  sweep_cmd->add_option("--trials", sweep.trials, "Instances per class size");
  auto* sweep_seed = sweep_cmd->add_option("--seed", sweep.seed, "Base seed; trial t uses seed + t");
  sweep_cmd->add_option("--max-rounds", sweep.max_rounds, "Resampling round cap");
  sweep_cmd->add_option("-o,--output", sweep.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      gen.seed_given = gen_seed->count() > 0;
      return run_gen(gen);
    }
    if (find_cmd->parsed()) {
      find.seed_given = find_seed->count() > 0;
      return run_find(find);
    }
    if (verify_cmd->parsed()) return run_verify(verify);
    if (product_cmd->parsed()) return run_product(product);
    if (sweep_cmd->parsed()) {
      sweep.seed_given = sweep_seed->count() > 0;
      return run_sweep(sweep);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "format: " << e.what() << "\n";
    return kFormat;
  } catch (const InputError& e) {
    std::cerr << "input: " << e.what() << "\n";
    return kFormat;
  } catch (const RetryableError& e) {
    std::cerr << "retryable: " << e.what() << "\n";
    return kRetryable;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return kSoftware;
  }
  return kUsage;
}
