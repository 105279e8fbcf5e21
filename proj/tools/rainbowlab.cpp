// rainbowlab: command-line front end for the rainbow cycle toolkit.
//
// Exit codes: 0 success, 1 verification failure / work cap / pipeline
// failure, 2 usage, I/O, parse or precondition errors.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rainbow/rainbow.hpp"

namespace {

using namespace rainbow;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

void emit(const std::string& data, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << data;
    std::cout.flush();
  } else {
    write_file(out, data);
  }
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

ColoredGraph read_graph(const std::string& path) { return load_graph(read_file(path)); }

struct Options {
  double work_cap = static_cast<double>(kDefaultWorkCap);

  // generate
  std::string family;
  unsigned dim = 0;
  std::size_t n = 0, m = 0, left = 0, right = 0;
  std::uint64_t seed = 0;
  std::string sides_out;

  std::string input, out, sides;
  unsigned k = 2;
  unsigned length = 0;
  bool assume_rainbow_free = false;
  std::string mode;
  bool greedy = false;
  std::size_t retries = 100;
  std::string grid;

  WorkCap cap() const { return WorkCap{static_cast<std::uint64_t>(work_cap)}; }
};

int run_generate(const Options& o, const CLI::App& cmd) {
  GeneratorSpec spec{o.family, {}};
  auto set = [&](const char* flag, const char* key, std::uint64_t value) {
    if (cmd.count(flag)) spec.params[key] = value;
  };
  set("--dim", "dim", o.dim);
  set("--n", "n", o.n);
  set("--m", "m", o.m);
  set("--left", "left", o.left);
  set("--right", "right", o.right);
  spec.params["seed"] = o.seed;

  if (o.family == "bipartite") {
    auto inst = random_bipartite_colored(spec.get("left"), spec.get("right"), spec.get("m"), o.seed);
    emit(save_graph(inst.graph), o.out);
    if (!o.sides_out.empty()) write_file(o.sides_out, to_json(inst.sides).dump() + "\n");
    return kOk;
  }
  Generated g = generate(spec);
  if (auto* h = std::get_if<LinearTripleSystem>(&g)) {
    if (h->size() < spec.get("m")) {
      std::cerr << "warning: generated " << h->size() << " of " << spec.get("m") << " requested triples\n";
    }
    emit(save_triples(*h), o.out);
  } else {
    emit(save_graph(std::get<ColoredGraph>(g)), o.out);
  }
  return kOk;
}

int run_census(const Options& o) {
  const auto g = read_graph(o.input);
  emit(pretty(to_json(walk_census(g, o.k, o.cap()))), o.out);
  return kOk;
}

int run_verify(const Options& o) {
  const auto g = read_graph(o.input);
  VerifyOptions opts;
  opts.assume_rainbow_free = o.assume_rainbow_free;
  opts.cap = o.cap();
  if (!o.sides.empty()) opts.sides = load_sides(read_file(o.sides));
  const auto report = verify_graph(g, o.k, opts);
  emit(pretty(to_json(report)), o.out);
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    if (c.status == Status::Fail) {
      ++failed;
      std::cerr << "FAIL " << c.name << ": " << c.lhs << " " << to_string(c.relation) << " " << c.rhs << "\n";
    }
  }
  std::cerr << "verify: " << report.checks.size() << " checks, " << failed << " failed\n";
  return report.passed() ? kOk : kFailed;
}

int run_regularize(const Options& o) {
  const auto g = read_graph(o.input);
  if (o.mode == "split") {
    const auto result = split_regularize(g);
    const auto report = verify_regularization(g, result);
    emit(pretty(Json{{"result", to_json(result)}, {"report", to_json(report)}}), o.out);
    return report.passed() ? kOk : kFailed;
  }

  // lopsided: trim to the densest subgraph first so the hypothesis holds
  const auto trimmed = max_avg_degree_subgraph(g, o.greedy ? DensestMethod::Greedy : DensestMethod::Exact);
  BipartitionTag sides;
  if (!o.sides.empty()) {
    const auto full = load_sides(read_file(o.sides));
    full.check(g);
    for (Vertex v : trimmed.original) sides.side.push_back(full.side[v]);
  } else {
    auto found = find_bipartition(trimmed.graph);
    if (!found) throw BipartitionError("densest subgraph is not bipartite; pass --sides or a bipartite input");
    sides = *found;
  }
  const auto result = lopsided_regularize(trimmed.graph, sides, o.k);
  const auto report = verify_regularization(trimmed.graph, sides, result);
  emit(pretty(Json{{"trimmed_vertices", trimmed.original},
                   {"sides", to_json(sides)["sides"]},
                   {"result", to_json(result)},
                   {"report", to_json(report)}}),
       o.out);
  return report.passed() ? kOk : kFailed;
}

int run_search(const Options& o, const CLI::App& cmd) {
  const auto g = read_graph(o.input);
  std::optional<unsigned> length;
  if (cmd.count("--length")) length = o.length;
  const auto cert = find_rainbow_cycle(g, length, o.cap());
  Json out;
  if (cert) {
    const auto check = certify(g, *cert);
    if (!check) throw LemmaViolation("search returned an invalid certificate: " + check.reason);
    out = Json{{"found", true}, {"length", cert->cycle.size()}};
    out.update(to_json(*cert));
  } else {
    out = Json{{"found", false}, {"result", "NONE"}};
    if (length) out["length"] = *length;
  }
  emit(pretty(out), o.out);
  return kOk;
}

int run_reduce3(const Options& o) {
  const auto h = load_triples(read_file(o.input));
  const auto r = loose_cycle_via_reduction(h, o.seed, o.retries, o.cap());
  Json out{{"found", r.cycle.has_value()}};
  out["loose_cycle"] = r.cycle ? to_json(*r.cycle) : Json(nullptr);
  out["transcript"] = to_json(r.transcript);
  emit(pretty(out), o.out);
  return kOk;
}

// "n=8,10;m=12,20" -> ordered (key, values) list
std::vector<std::pair<std::string, std::vector<std::uint64_t>>> parse_grid(const std::string& text) {
  std::vector<std::pair<std::string, std::vector<std::uint64_t>>> grid;
  std::stringstream axes(text);
  std::string axis;
  while (std::getline(axes, axis, ';')) {
    if (axis.empty()) continue;
    const auto eq = axis.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("grid axis '" + axis + "' must look like key=v1,v2");
    std::vector<std::uint64_t> values;
    std::stringstream vs(axis.substr(eq + 1));
    std::string v;
    while (std::getline(vs, v, ',')) {
      std::size_t used = 0;
      std::uint64_t x = 0;
      try {
        x = std::stoull(v, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != v.size()) throw ParseError("grid value '" + v + "' is not a nonnegative integer");
      values.push_back(x);
    }
    if (values.empty()) throw ParseError("grid axis '" + axis + "' has no values");
    grid.emplace_back(axis.substr(0, eq), std::move(values));
  }
  if (grid.empty()) throw ParseError("empty parameter grid");
  return grid;
}

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

int run_scan(const Options& o) {
  if (o.family == "triples") throw PreconditionError("scan works on graph families only");
  const auto grid = parse_grid(o.grid);
  std::ostringstream csv;
  csv << "family,n,m,k,found,cycle_length,threshold_thm1_log2,threshold_thm1_ln,threshold_thm2,seed\n";

  std::vector<std::size_t> index(grid.size(), 0);
  while (true) {
    GeneratorSpec spec{o.family, {{"seed", o.seed}}};
    for (std::size_t a = 0; a < grid.size(); ++a) spec.params[grid[a].first] = grid[a].second[index[a]];
    const auto g = std::get<ColoredGraph>(generate(spec));
    const auto cert = find_rainbow_cycle(g, std::nullopt, o.cap());

    const double n = static_cast<double>(g.n());
    const double thm1_log2 = n > 0 ? 32 * n * std::pow(std::log2(5 * n), 2) : 0;
    const double thm1_ln = n > 0 ? 32 * n * std::pow(std::log(5 * n), 2) : 0;
    const double thm2 = 1e5 * std::pow(o.k, 3) * std::pow(n, 1 + 1.0 / o.k);
    csv << o.family << ',' << g.n() << ',' << g.edge_count() << ',' << o.k << ',' << (cert ? 1 : 0) << ','
        << (cert ? std::to_string(cert->cycle.size()) : "") << ',' << fixed(thm1_log2) << ',' << fixed(thm1_ln)
        << ',' << fixed(thm2) << ',' << o.seed << '\n';

    // odometer over the grid, last axis fastest
    std::size_t a = grid.size();
    while (a > 0 && ++index[a - 1] == grid[a - 1].second.size()) index[--a] = 0;
    if (a == 0) break;
  }
  emit(csv.str(), o.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow cycle toolkit: walk census, inequality checks, regularization and search"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--work-cap", o.work_cap, "Abort computations whose estimated work exceeds this")
      ->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("generate", "Write a generated instance");
  gen->add_option("family", o.family, "hypercube | one-factorization | random | bipartite | triples")
      ->required()
      ->check(CLI::IsMember({"hypercube", "one-factorization", "random", "bipartite", "triples"}));
  gen->add_option("--dim", o.dim, "Hypercube dimension");
  gen->add_option("--n", o.n, "Number of vertices");
  gen->add_option("--m", o.m, "Number of edges or triples");
  gen->add_option("--left", o.left, "Bipartite LEFT size");
  gen->add_option("--right", o.right, "Bipartite RIGHT size");
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--out", o.out, "Output file (default: stdout)");
  gen->add_option("--sides-out", o.sides_out, "Bipartite family: also write the sides document here");

  auto* census = app.add_subcommand("census", "Classify every closed 2k-walk");
  census->add_option("--input", o.input, "Graph document")->required();
  census->add_option("--k", o.k, "Half the walk length")->required()->check(CLI::Range(2u, 64u));
  census->add_option("--out", o.out, "Output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Check the closed-walk inequalities on one graph");
  verify->add_option("--input", o.input, "Graph document")->required();
  verify->add_option("--k", o.k, "Half the cycle length")->required()->check(CLI::Range(2u, 64u));
  verify->add_option("--sides", o.sides, "Sides document for the bipartite homomorphism bound");
  verify->add_flag("--assume-rainbow-free", o.assume_rainbow_free,
                   "Run conditional checks even if a rainbow 2k-cycle exists");
  verify->add_option("--out", o.out, "Output file (default: stdout)");

  auto* reg = app.add_subcommand("regularize", "Vertex splitting or lopsided regularization");
  reg->add_option("mode", o.mode, "split | lopsided")->required()->check(CLI::IsMember({"split", "lopsided"}));
  reg->add_option("--input", o.input, "Graph document")->required();
  reg->add_option("--k", o.k, "Cycle half-length for lopsided mode")->check(CLI::Range(2u, 64u));
  reg->add_option("--sides", o.sides, "Sides document (lopsided; default: computed)");
  reg->add_flag("--greedy", o.greedy, "Greedy peeling instead of the exact densest subgraph");
  reg->add_option("--out", o.out, "Output file (default: stdout)");

  auto* search = app.add_subcommand("search", "Find a rainbow cycle");
  search->add_option("--input", o.input, "Graph document")->required();
  search->add_option("--length", o.length, "Exact cycle length (default: shortest)")->check(CLI::Range(3u, 1u << 20));
  search->add_option("--seed", o.seed, "Accepted for interface symmetry; the search is deterministic");
  search->add_option("--out", o.out, "Output file (default: stdout)");

  auto* reduce = app.add_subcommand("reduce3", "Loose cycle in a linear triple system via rainbow cycles");
  reduce->add_option("--input", o.input, "Triple system document")->required();
  reduce->add_option("--seed", o.seed, "Random seed")->required();
  reduce->add_option("--retries", o.retries, "Tripartitions to try")->required();
  reduce->add_option("--out", o.out, "Output file (default: stdout)");

  auto* scan = app.add_subcommand("scan", "Density sweep over a parameter grid, CSV output");
  scan->add_option("--family", o.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"hypercube", "one-factorization", "random", "bipartite"}));
  scan->add_option("--param-grid", o.grid, "e.g. \"n=8,10;m=12,20\"")->required();
  scan->add_option("--k", o.k, "Cycle half-length for the reference threshold")->required()->check(CLI::Range(2u, 64u));
  scan->add_option("--seed", o.seed, "Random seed")->required();
  scan->add_option("--out", o.out, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return run_generate(o, *gen);
    if (*census) return run_census(o);
    if (*verify) return run_verify(o);
    if (*reg) return run_regularize(o);
    if (*search) return run_search(o, *search);
    if (*reduce) return run_reduce3(o);
    if (*scan) return run_scan(o);
  } catch (const WorkCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const LemmaViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const PartitionFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
