#include "mclique/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace mclique {
namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw FormatError("expected a non-negative integer, got '" + std::string(tok) + "'", line_no);
  return value;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

// `base` only affects the message, which quotes the id as written.
Vertex checked_id(std::uint64_t id, std::uint64_t n, std::size_t line_no, int base = 0) {
  if (id >= n)
    throw FormatError("vertex id " + std::to_string(id + static_cast<std::uint64_t>(base)) +
                          " out of range for " + std::to_string(n) + " vertices",
                      line_no);
  return static_cast<Vertex>(id);
}

}  // namespace

FileFormat parse_format_name(std::string_view name) {
  const auto s = lower(name);
  if (s == "dimacs" || s == "clq") return FileFormat::Dimacs;
  if (s == "edgelist" || s == "edge-list" || s == "snap" || s == "el") return FileFormat::EdgeList;
  if (s == "mtx" || s == "matrix-market" || s == "matrixmarket") return FileFormat::MatrixMarket;
  throw UnsupportedFormatError("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(FileFormat f) {
  switch (f) {
    case FileFormat::Dimacs: return "dimacs";
    case FileFormat::EdgeList: return "edgelist";
    case FileFormat::MatrixMarket: return "mtx";
  }
  return "?";
}

std::optional<FileFormat> format_from_extension(const std::filesystem::path& p) {
  const auto ext = lower(p.extension().string());
  if (ext == ".clq" || ext == ".col" || ext == ".dimacs") return FileFormat::Dimacs;
  if (ext == ".mtx") return FileFormat::MatrixMarket;
  if (ext == ".txt" || ext == ".el" || ext == ".edges" || ext == ".tsv") return FileFormat::EdgeList;
  return std::nullopt;
}

EdgeList parse_dimacs(std::istream& in) {
  EdgeList out;
  bool have_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const auto tok = split(line);
    const auto kind = tok[0];
    if (kind == "c") continue;
    if (kind == "p") {
      if (have_header) throw FormatError("duplicate 'p' line", line_no);
      if (tok.size() != 4) throw FormatError("malformed 'p' line, expected 'p edge <n> <m>'", line_no);
      if (tok[1] != "edge" && tok[1] != "col" && tok[1] != "edges")
        throw FormatError("unsupported problem type '" + std::string(tok[1]) + "'", line_no);
      out.n = to_uint(tok[2], line_no);
      out.edges.reserve(to_uint(tok[3], line_no));
      have_header = true;
    } else if (kind == "e") {
      if (!have_header) throw FormatError("edge before 'p' line", line_no);
      if (tok.size() != 3) throw FormatError("malformed 'e' line, expected 'e <u> <v>'", line_no);
      const auto u = to_uint(tok[1], line_no);
      const auto v = to_uint(tok[2], line_no);
      if (u == 0 || v == 0) throw FormatError("DIMACS ids are 1-based, got 0", line_no);
      out.edges.emplace_back(checked_id(u - 1, out.n, line_no, 1), checked_id(v - 1, out.n, line_no, 1));
    } else if (kind == "n") {
      // vertex weights, not used
    } else {
      throw FormatError("unknown line type '" + std::string(kind) + "'", line_no);
    }
  }
  if (!have_header) throw FormatError("missing 'p edge <n> <m>' line");
  return out;
}

EdgeList parse_edge_list(std::istream& in, int base) {
  if (base != 0 && base != 1) throw std::invalid_argument("edge list base must be 0 or 1");
  EdgeList out;
  std::uint64_t declared = 0;
  std::uint64_t max_id = 0;
  bool any = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const auto tok = split(line);
    if (tok[0][0] == '#' || tok[0][0] == '%') {
      // SNAP header: "# Nodes: 36692 Edges: 367662"
      for (std::size_t i = 0; i + 1 < tok.size(); ++i)
        if (lower(tok[i]) == "nodes:") declared = to_uint(tok[i + 1], line_no);
      continue;
    }
    if (tok.size() < 2) throw FormatError("expected a vertex pair", line_no);
    auto u = to_uint(tok[0], line_no);
    auto v = to_uint(tok[1], line_no);
    if (base == 1) {
      if (u == 0 || v == 0) throw FormatError("1-based edge list contains id 0", line_no);
      --u;
      --v;
    }
    if (std::max(u, v) >= std::numeric_limits<Vertex>::max())
      throw FormatError("vertex id exceeds 32-bit id space", line_no);
    max_id = std::max({max_id, u, v});
    any = true;
    out.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  out.n = std::max<std::uint64_t>(declared, any ? max_id + 1 : 0);
  return out;
}

EdgeList parse_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw FormatError("empty input, expected %%MatrixMarket banner");
  ++line_no;
  const auto banner = split(line);
  if (banner.empty() || lower(banner[0]) != "%%matrixmarket")
    throw FormatError("missing %%MatrixMarket banner", line_no);
  if (banner.size() < 5) throw FormatError("incomplete %%MatrixMarket banner", line_no);
  if (lower(banner[1]) != "matrix")
    throw UnsupportedFormatError("Matrix Market object '" + std::string(banner[1]) + "' not supported");
  if (lower(banner[2]) != "coordinate")
    throw UnsupportedFormatError("Matrix Market layout '" + std::string(banner[2]) + "' not supported");
  const auto field = lower(banner[3]);
  if (field != "pattern" && field != "real" && field != "integer" && field != "double")
    throw UnsupportedFormatError("Matrix Market field '" + std::string(banner[3]) + "' not supported");
  const auto symmetry = lower(banner[4]);
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric")
    throw UnsupportedFormatError("Matrix Market symmetry '" + std::string(banner[4]) +
                                 "' not supported");

  EdgeList out;
  bool have_size = false;
  std::uint64_t expected = 0;
  std::uint64_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line[0] == '%') continue;
    const auto tok = split(line);
    if (!have_size) {
      if (tok.size() != 3) throw FormatError("expected '<rows> <cols> <entries>'", line_no);
      out.n = std::max(to_uint(tok[0], line_no), to_uint(tok[1], line_no));
      expected = to_uint(tok[2], line_no);
      out.edges.reserve(expected);
      have_size = true;
      continue;
    }
    if (tok.size() < 2) throw FormatError("expected '<row> <col> [value]'", line_no);
    const auto i = to_uint(tok[0], line_no);
    const auto j = to_uint(tok[1], line_no);
    if (i == 0 || j == 0) throw FormatError("Matrix Market indices are 1-based, got 0", line_no);
    ++seen;
    if (i == j) continue;
    out.edges.emplace_back(checked_id(i - 1, out.n, line_no, 1), checked_id(j - 1, out.n, line_no, 1));
  }
  if (!have_size) throw FormatError("missing size line");
  if (seen != expected)
    throw FormatError("declared " + std::to_string(expected) + " entries, found " +
                      std::to_string(seen));
  return out;
}

EdgeList parse(std::istream& in, FileFormat f) {
  switch (f) {
    case FileFormat::Dimacs: return parse_dimacs(in);
    case FileFormat::EdgeList: return parse_edge_list(in, 0);
    case FileFormat::MatrixMarket: return parse_matrix_market(in);
  }
  throw UnsupportedFormatError("unknown format");
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "c written by mclique\n";
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edge_pairs()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# Nodes: " << g.num_vertices() << " Edges: " << g.num_edges() << '\n';
  for (auto [u, v] : g.edge_pairs()) out << u << ' ' << v << '\n';
}

void write_matrix_market(std::ostream& out, const Graph& g) {
  out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
  out << g.num_vertices() << ' ' << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edge_pairs()) out << v + 1 << ' ' << u + 1 << '\n';
}

void write(std::ostream& out, const Graph& g, FileFormat f) {
  switch (f) {
    case FileFormat::Dimacs: return write_dimacs(out, g);
    case FileFormat::EdgeList: return write_edge_list(out, g);
    case FileFormat::MatrixMarket: return write_matrix_market(out, g);
  }
}

Graph load_graph(const std::filesystem::path& p, std::optional<FileFormat> f) {
  if (!f) f = format_from_extension(p);
  if (!f)
    throw UnsupportedFormatError("cannot infer graph format from '" + p.string() +
                                 "', pass it explicitly");
  std::ifstream in(p);
  if (!in) throw FileNotReadable("cannot open '" + p.string() + "'");
  return normalize(parse(in, *f));
}

void save_graph(const std::filesystem::path& p, const Graph& g, FileFormat f) {
  std::ofstream out(p);
  if (!out) throw FileNotReadable("cannot write '" + p.string() + "'");
  write(out, g, f);
}

}  // namespace mclique
