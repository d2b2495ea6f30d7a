#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mclique/exact.hpp"
#include "mclique/io.hpp"

namespace mclique {

/// One manifest line:
///
///   <name> <source> [algos=exact,heuristic,...] [format=dimacs|edgelist|mtx]
///                   [lb=N] [order=natural|degree] [threads=K] [seed=S]
///                   [time-limit=SECONDS]
///
/// <source> is a file path (relative to the manifest), `gen:<instance>` for a
/// constructible DIMACS instance, or `rmat:<er|sd1|sd2>:<scale>[:<seed>]`.
/// Algorithms: exact, heuristic, random (uniform-random heuristic), cp, brute.
/// Blank lines and lines starting with `#` are ignored.
struct ManifestEntry {
  std::string name;
  std::string source;
  std::optional<FileFormat> format;
  std::vector<std::string> algorithms{"exact", "heuristic", "cp"};
  std::size_t lb = 0;
  Ordering ordering = Ordering::NaturalIndex;
  std::optional<unsigned> threads;
  std::uint64_t seed = 0;
  std::optional<double> time_limit;
};

std::vector<ManifestEntry> parse_manifest(std::istream& in,
                                          const std::filesystem::path& base_dir = {});

struct BenchRow {
  std::string graph;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::string algorithm;
  std::string policy;
  std::uint64_t seed = 0;
  std::size_t size = 0;
  double elapsed = 0.0;
  std::uint64_t p1 = 0, p2 = 0, p3 = 0, p4 = 0, p5 = 0;
  std::uint64_t nodes = 0;
  bool exact = false;
  /// ok | timeout | missing | error | refused
  std::string status = "ok";
  std::string message;
};

struct BenchOptions {
  std::optional<double> time_limit;
  unsigned threads = 1;
};

/// Loads the graph named by a manifest source. Throws FileNotReadable when a
/// file source does not exist.
Graph load_source(const ManifestEntry& e);

/// Runs every (entry, algorithm) pair in order; failures become rows with a
/// non-ok status and the run continues.
std::vector<BenchRow> run_bench(const std::vector<ManifestEntry>& entries, const BenchOptions& opts);

/// Column names of the v1 CSV layout, in order.
const std::vector<std::string>& bench_csv_columns();
void write_bench_csv_header(std::ostream& out);
void write_bench_csv_row(std::ostream& out, const BenchRow& row);

/// RFC 4180 quoting: fields containing a comma, quote, CR or LF are quoted
/// with embedded quotes doubled.
std::string csv_field(std::string_view s);

}  // namespace mclique
