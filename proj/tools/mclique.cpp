// mclique: command-line front end.
//
// Exit codes (stable):
//   0 success
//   1 internal error
//   2 usage error (bad flags, unknown format token, bad flag combination)
//   3 parse/format error in an input file
//   4 time limit reached (best-so-far result still printed)
//   5 input file missing or unreadable
//   6 request refused (brute force on too large a graph, invalid parameters)

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mclique/baseline.hpp"
#include "mclique/bench.hpp"
#include "mclique/community.hpp"
#include "mclique/exact.hpp"
#include "mclique/families.hpp"
#include "mclique/heuristic.hpp"
#include "mclique/io.hpp"
#include "mclique/report.hpp"
#include "mclique/rmat.hpp"

namespace {

using namespace mclique;

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kParse = 3, kTimeout = 4, kUnreadable = 5, kRefused = 6 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<FileFormat> format_flag(const std::string& token) {
  if (token.empty()) return std::nullopt;
  try {
    return parse_format_name(token);
  } catch (const UnsupportedFormatError& e) {
    throw UsageError(e.what());
  }
}

Graph read_input(const std::string& path, const std::string& fmt) {
  auto f = format_flag(fmt);
  if (!f && !format_from_extension(path))
    throw UsageError("cannot tell the format of '" + path + "' from its extension; pass --format");
  return load_graph(path, f);
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw FileNotReadable("cannot open '" + path + "' for writing");
  return file;
}

// Defaults that the environment may override; explicit flags win.
std::optional<double> env_time_limit() {
  const char* s = std::getenv("MCLIQUE_TIME_LIMIT");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (*end || v < 0) throw UsageError("MCLIQUE_TIME_LIMIT must be a non-negative number");
  return v;
}

unsigned env_threads() {
  const char* s = std::getenv("MCLIQUE_THREADS");
  if (!s || !*s) return 1;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (*end || v < 1) throw UsageError("MCLIQUE_THREADS must be a positive integer");
  return static_cast<unsigned>(v);
}

struct SolveArgs {
  std::string input;
  std::string format;
  std::string algo = "exact";
  std::size_t lb = 0;
  std::string order = "natural";
  std::optional<unsigned> threads;
  std::optional<double> time_limit;
  std::string policy;
  std::optional<std::uint64_t> seed;
  bool per_vertex = false;
};

int cmd_solve(const SolveArgs& a) {
  const bool heuristic = a.algo == "heuristic";
  if (!a.policy.empty() && !heuristic) throw UsageError("--policy only applies to --algo heuristic");
  if (a.seed && a.policy != "random") throw UsageError("--seed requires --policy random");
  if (a.per_vertex && !heuristic) throw UsageError("--per-vertex only applies to --algo heuristic");
  if (a.lb && a.algo != "exact") throw UsageError("--lb only applies to --algo exact");

  const Graph g = read_input(a.input, a.format);
  const unsigned threads = a.threads.value_or(env_threads());
  const auto limit = a.time_limit ? a.time_limit : env_time_limit();

  if (a.per_vertex) {
    write_per_vertex_cliques(std::cout, largest_clique_per_vertex(g, threads));
    return kOk;
  }

  CliqueResult r;
  std::optional<SelectionPolicy> policy;
  if (a.algo == "exact") {
    SolverConfig cfg;
    cfg.lb = a.lb;
    cfg.ordering = a.order == "degree" ? Ordering::DegreeDescending : Ordering::NaturalIndex;
    cfg.threads = threads;
    cfg.time_limit = limit;
    r = max_clique(g, cfg);
  } else if (heuristic) {
    policy = a.policy == "random" ? SelectionPolicy::uniform_random(a.seed.value_or(0))
                                  : SelectionPolicy::max_degree();
    r = max_clique_heuristic(g, *policy, threads);
  } else if (a.algo == "cp") {
    r = max_clique_cp(g, limit);
  } else {
    r = brute_force(g);
  }
  std::cout << result_to_json(r, a.algo, policy).dump() << '\n';
  return r.exact || heuristic ? kOk : kTimeout;
}

int cmd_bench(const std::string& manifest, const std::string& out_path,
              std::optional<double> time_limit, std::optional<unsigned> threads) {
  std::ifstream in(manifest);
  if (!in) throw FileNotReadable("cannot read manifest '" + manifest + "'");
  const auto entries = parse_manifest(in, std::filesystem::path(manifest).parent_path());
  BenchOptions opts;
  opts.time_limit = time_limit ? time_limit : env_time_limit();
  opts.threads = threads.value_or(env_threads());

  std::ofstream file;
  std::ostream& out = open_out(out_path, file);
  write_bench_csv_header(out);
  // Rows are written as they finish so a long run leaves a usable partial CSV.
  for (const auto& e : entries)
    for (const auto& row : run_bench({e}, opts)) {
      write_bench_csv_row(out, row);
      out.flush();
    }
  return kOk;
}

int cmd_stats(const std::string& input, const std::string& fmt) {
  std::cout << stats_to_json(read_input(input, fmt)).dump() << '\n';
  return kOk;
}

int cmd_convert(const std::string& in_path, const std::string& in_fmt, const std::string& out_path,
                const std::string& out_fmt) {
  const Graph g = read_input(in_path, in_fmt);
  auto f = format_flag(out_fmt);
  if (!f) f = format_from_extension(out_path);
  if (!f) throw UsageError("cannot tell the output format of '" + out_path + "'; pass --to");
  std::ofstream file;
  write(open_out(out_path, file), g, *f);
  return kOk;
}

int cmd_gen_rmat(const std::string& family, unsigned scale, std::uint64_t seed,
                 std::uint64_t edge_factor, unsigned threads, const std::string& out_path) {
  RmatParams p;
  try {
    p = family_preset(family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  p.scale = scale;
  p.seed = seed;
  p.edge_factor = edge_factor;
  const Graph g = generate_rmat(p, threads);
  std::ofstream file;
  write_edge_list(open_out(out_path, file), g);
  return kOk;
}

int cmd_gen_dimacs(const std::string& name, const std::string& out_path, const std::string& fmt) {
  if (name == "list") {
    for (const auto& i : constructible_instances())
      std::cout << i.name << ' ' << i.n << ' ' << i.m << ' ' << i.omega << '\n';
    return kOk;
  }
  auto g = construct_instance(name);
  if (!g) throw UsageError("unknown instance '" + name + "' (try --name list)");
  auto f = format_flag(fmt);
  if (!f) f = format_from_extension(out_path).value_or(FileFormat::Dimacs);
  std::ofstream file;
  write(open_out(out_path, file), *g, *f);
  return kOk;
}

int cmd_probe(const std::string& family, const std::vector<unsigned>& scales, std::uint64_t seed,
              const std::string& out_path) {
  RmatParams p;
  try {
    p = family_preset(family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ofstream file;
  std::ostream& out = open_out(out_path, file);
  write_scaling_csv_header(out);
  for (unsigned s : scales) {
    p.scale = s;
    p.seed = seed;
    write_scaling_csv_row(out, "rmat_" + family + "_" + std::to_string(s),
                          heuristic_scaling_probe(generate_rmat(p)));
    out.flush();
  }
  return kOk;
}

int cmd_communities(const std::string& input, double threshold, unsigned threads,
                    const std::string& out_path) {
  std::ifstream in(input);
  if (!in) throw FileNotReadable("cannot read '" + input + "'");
  const auto wg = build_cooccurrence_graph(parse_interaction_records(in));
  const auto communities = detect_communities(threshold_filter(wg, threshold), threads);
  std::ofstream file;
  open_out(out_path, file) << communities_to_json(wg.labels, communities).dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum clique toolkit for large sparse graphs"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Find a maximum clique (JSON on stdout)");
  s->add_option("input", solve.input, "Graph file")->required();
  s->add_option("--format", solve.format, "dimacs | edgelist | mtx (default: from extension)");
  s->add_option("--algo", solve.algo, "exact | heuristic | cp | brute")
      ->check(CLI::IsMember({"exact", "heuristic", "cp", "brute"}));
  s->add_option("--lb", solve.lb, "Known lower bound on the clique size");
  s->add_option("--order", solve.order, "natural | degree")->check(CLI::IsMember({"natural", "degree"}));
  s->add_option("--threads", solve.threads, "Worker threads")->check(CLI::PositiveNumber);
  s->add_option("--time-limit", solve.time_limit, "Seconds")->check(CLI::NonNegativeNumber);
  s->add_option("--policy", solve.policy, "maxdeg | random (heuristic only)")
      ->check(CLI::IsMember({"maxdeg", "random"}));
  s->add_option("--seed", solve.seed, "Seed for --policy random");
  s->add_flag("--per-vertex", solve.per_vertex, "Print the heuristic clique of every vertex");

  std::string manifest, bench_out;
  std::optional<double> bench_limit;
  std::optional<unsigned> bench_threads;
  auto* b = app.add_subcommand("bench", "Run a manifest of graphs and algorithms, write CSV");
  b->add_option("manifest", manifest, "Manifest file")->required();
  b->add_option("--out", bench_out, "CSV output (default stdout)");
  b->add_option("--time-limit", bench_limit, "Default per-run seconds")->check(CLI::NonNegativeNumber);
  b->add_option("--threads", bench_threads, "Default worker threads")->check(CLI::PositiveNumber);

  std::string stats_in, stats_fmt;
  auto* st = app.add_subcommand("stats", "Structural summary (JSON)");
  st->add_option("input", stats_in, "Graph file")->required();
  st->add_option("--format", stats_fmt, "Input format");

  std::string conv_in, conv_out, conv_from, conv_to;
  auto* c = app.add_subcommand("convert", "Convert between graph formats");
  c->add_option("input", conv_in, "Input file")->required();
  c->add_option("output", conv_out, "Output file ('-' for stdout)")->required();
  c->add_option("--from", conv_from, "Input format");
  c->add_option("--to", conv_to, "Output format");

  std::string family = "er", rmat_out;
  unsigned scale = 10, rmat_threads = 1;
  std::uint64_t rmat_seed = 0, edge_factor = 8;
  auto* r = app.add_subcommand("gen-rmat", "Generate an R-MAT graph (edge list)");
  r->add_option("--family", family, "er | sd1 | sd2");
  r->add_option("--scale", scale, "log2 of the vertex count")->check(CLI::Range(1u, 31u));
  r->add_option("--seed", rmat_seed, "RNG seed");
  r->add_option("--edge-factor", edge_factor, "Edge draws per vertex");
  r->add_option("--threads", rmat_threads, "Generator threads")->check(CLI::PositiveNumber);
  r->add_option("--out", rmat_out, "Output file (default stdout)");

  std::string gd_name, gd_out, gd_fmt;
  auto* gd = app.add_subcommand("gen-dimacs", "Construct a structured DIMACS benchmark");
  gd->add_option("--name", gd_name, "Instance name, or 'list'")->required();
  gd->add_option("--out", gd_out, "Output file (default stdout)");
  gd->add_option("--format", gd_fmt, "Output format (default dimacs)");

  std::string probe_family = "er", probe_out;
  std::vector<unsigned> probe_scales{12, 13, 14, 15, 16};
  std::uint64_t probe_seed = 0;
  auto* p = app.add_subcommand("probe", "Heuristic run time over an R-MAT scale series (CSV)");
  p->add_option("--family", probe_family, "er | sd1 | sd2");
  p->add_option("--scales", probe_scales, "Scales")->delimiter(',');
  p->add_option("--seed", probe_seed, "RNG seed");
  p->add_option("--out", probe_out, "CSV output (default stdout)");

  std::string comm_in, comm_out;
  double threshold = 0.0;
  unsigned comm_threads = 0;
  auto* cm = app.add_subcommand("communities", "Overlapping communities from (wall, user) records");
  cm->add_option("--input", comm_in, "Two-column records file")->required();
  cm->add_option("--threshold", threshold, "Keep edges with Jaccard weight above this")
      ->check(CLI::Range(0.0, 1.0));
  cm->add_option("--threads", comm_threads, "Worker threads")->check(CLI::PositiveNumber);
  cm->add_option("--out", comm_out, "JSON output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*s) return cmd_solve(solve);
    if (*b) return cmd_bench(manifest, bench_out, bench_limit, bench_threads);
    if (*st) return cmd_stats(stats_in, stats_fmt);
    if (*c) return cmd_convert(conv_in, conv_from, conv_out, conv_to);
    if (*r) return cmd_gen_rmat(family, scale, rmat_seed, edge_factor, rmat_threads, rmat_out);
    if (*gd) return cmd_gen_dimacs(gd_name, gd_out, gd_fmt);
    if (*p) return cmd_probe(probe_family, probe_scales, probe_seed, probe_out);
    if (*cm) return cmd_communities(comm_in, threshold, comm_threads ? comm_threads : env_threads(), comm_out);
  } catch (const UsageError& e) {
    std::cerr << "mclique: " << e.what() << '\n';
    return kUsage;
  } catch (const FileNotReadable& e) {
    std::cerr << "mclique: " << e.what() << '\n';
    return kUnreadable;
  } catch (const FormatError& e) {
    std::cerr << "mclique: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const UnsupportedFormatError& e) {
    std::cerr << "mclique: unsupported input: " << e.what() << '\n';
    return kParse;
  } catch (const BruteForceRefused& e) {
    std::cerr << "mclique: refused: " << e.what() << '\n';
    return kRefused;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mclique: " << e.what() << '\n';
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "mclique: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
