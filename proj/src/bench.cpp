#include "mclique/bench.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "mclique/baseline.hpp"
#include "mclique/families.hpp"
#include "mclique/heuristic.hpp"
#include "mclique/rmat.hpp"

namespace mclique {
namespace {

template <typename T>
T parse_number(std::string_view s, std::size_t line_no, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw FormatError("invalid " + std::string(what) + " '" + std::string(s) + "'", line_no);
  return value;
}

std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool known_algorithm(std::string_view a) {
  return a == "exact" || a == "heuristic" || a == "random" || a == "cp" || a == "brute";
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::istream& in, const std::filesystem::path& base_dir) {
  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    ManifestEntry e;
    if (!(fields >> e.name) || e.name[0] == '#') continue;
    if (!(fields >> e.source)) throw FormatError("expected '<name> <source> [key=value...]'", line_no);
    if (!e.source.starts_with("gen:") && !e.source.starts_with("rmat:")) {
      std::filesystem::path p(e.source);
      if (p.is_relative() && !base_dir.empty()) e.source = (base_dir / p).string();
    }
    for (std::string opt; fields >> opt;) {
      const auto eq = opt.find('=');
      if (eq == std::string::npos) throw FormatError("expected key=value, got '" + opt + "'", line_no);
      const std::string key = opt.substr(0, eq);
      const std::string value = opt.substr(eq + 1);
      if (key == "algos") {
        e.algorithms = split_on(value, ',');
        for (const auto& a : e.algorithms)
          if (!known_algorithm(a)) throw FormatError("unknown algorithm '" + a + "'", line_no);
      } else if (key == "format") {
        try {
          e.format = parse_format_name(value);
        } catch (const UnsupportedFormatError& err) {
          throw FormatError(err.what(), line_no);
        }
      } else if (key == "lb") {
        e.lb = parse_number<std::size_t>(value, line_no, "lb");
      } else if (key == "order") {
        if (value == "natural")
          e.ordering = Ordering::NaturalIndex;
        else if (value == "degree")
          e.ordering = Ordering::DegreeDescending;
        else
          throw FormatError("unknown order '" + value + "'", line_no);
      } else if (key == "threads") {
        e.threads = parse_number<unsigned>(value, line_no, "thread count");
        if (*e.threads == 0) throw FormatError("threads must be positive", line_no);
      } else if (key == "seed") {
        e.seed = parse_number<std::uint64_t>(value, line_no, "seed");
      } else if (key == "time-limit") {
        e.time_limit = parse_number<double>(value, line_no, "time limit");
      } else {
        throw FormatError("unknown manifest key '" + key + "'", line_no);
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

Graph load_source(const ManifestEntry& e) {
  if (e.source.starts_with("gen:")) {
    auto g = construct_instance(std::string_view(e.source).substr(4));
    if (!g) throw std::invalid_argument("unknown constructible instance '" + e.source.substr(4) + "'");
    return std::move(*g);
  }
  if (e.source.starts_with("rmat:")) {
    const auto parts = split_on(e.source, ':');
    if (parts.size() < 3 || parts.size() > 4)
      throw std::invalid_argument("expected rmat:<family>:<scale>[:<seed>], got '" + e.source + "'");
    auto params = family_preset(parts[1]);
    params.scale = parse_number<unsigned>(parts[2], 0, "R-MAT scale");
    if (parts.size() == 4) params.seed = parse_number<std::uint64_t>(parts[3], 0, "R-MAT seed");
    return generate_rmat(params);
  }
  if (!std::filesystem::exists(e.source)) throw FileNotReadable("no such file '" + e.source + "'");
  return load_graph(e.source, e.format);
}

std::vector<BenchRow> run_bench(const std::vector<ManifestEntry>& entries, const BenchOptions& opts) {
  std::vector<BenchRow> rows;
  for (const auto& e : entries) {
    BenchRow base;
    base.graph = e.name;
    std::optional<Graph> g;
    try {
      g = load_source(e);
      base.n = g->num_vertices();
      base.m = g->num_edges();
      base.max_degree = g->max_degree();
    } catch (const FileNotReadable& err) {
      base.status = "missing";
      base.message = err.what();
    } catch (const std::exception& err) {
      base.status = "error";
      base.message = err.what();
    }

    for (const auto& algo : e.algorithms) {
      BenchRow row = base;
      row.algorithm = algo;
      if (!g) {
        rows.push_back(std::move(row));
        continue;
      }
      const auto limit = e.time_limit ? e.time_limit : opts.time_limit;
      const unsigned threads = e.threads.value_or(opts.threads);
      try {
        CliqueResult r;
        if (algo == "exact") {
          SolverConfig cfg;
          cfg.lb = e.lb;
          cfg.ordering = e.ordering;
          cfg.threads = threads;
          cfg.time_limit = limit;
          r = max_clique(*g, cfg);
        } else if (algo == "heuristic") {
          r = max_clique_heuristic(*g, SelectionPolicy::max_degree(), threads);
          row.policy = "maxdeg";
        } else if (algo == "random") {
          r = max_clique_heuristic(*g, SelectionPolicy::uniform_random(e.seed), threads);
          row.policy = "random";
          row.seed = e.seed;
        } else if (algo == "cp") {
          r = max_clique_cp(*g, limit);
        } else {
          r = brute_force(*g);
        }
        row.size = r.size;
        row.elapsed = r.elapsed;
        row.p1 = r.stats.p1;
        row.p2 = r.stats.p2;
        row.p3 = r.stats.p3;
        row.p4 = r.stats.p4;
        row.p5 = r.stats.p5;
        row.nodes = r.nodes;
        row.exact = r.exact;
        if (!r.exact && algo != "heuristic" && algo != "random") row.status = "timeout";
      } catch (const BruteForceRefused& err) {
        row.status = "refused";
        row.message = err.what();
      } catch (const std::exception& err) {
        row.status = "error";
        row.message = err.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

const std::vector<std::string>& bench_csv_columns() {
  static const std::vector<std::string> columns = {
      "graph", "n",  "m",  "max_degree", "algorithm", "policy", "seed",  "size",   "elapsed",
      "p1",    "p2", "p3", "p4",         "p5",        "nodes",  "exact", "status", "message"};
  return columns;
}

void write_bench_csv_header(std::ostream& out) {
  const auto& cols = bench_csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << "\r\n";
}

void write_bench_csv_row(std::ostream& out, const BenchRow& r) {
  out << csv_field(r.graph) << ',' << r.n << ',' << r.m << ',' << r.max_degree << ','
      << csv_field(r.algorithm) << ',' << csv_field(r.policy) << ',' << r.seed << ',' << r.size
      << ',' << r.elapsed << ',' << r.p1 << ',' << r.p2 << ',' << r.p3 << ',' << r.p4 << ','
      << r.p5 << ',' << r.nodes << ',' << (r.exact ? "true" : "false") << ','
      << csv_field(r.status) << ',' << csv_field(r.message) << "\r\n";
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace mclique
