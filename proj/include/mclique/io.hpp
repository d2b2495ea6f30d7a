#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "mclique/graph.hpp"

namespace mclique {

enum class FileFormat { Dimacs, EdgeList, MatrixMarket };

/// "dimacs" | "edgelist" | "mtx"; throws UnsupportedFormatError otherwise.
FileFormat parse_format_name(std::string_view name);
std::string_view format_name(FileFormat f);

/// Guess from the extension (.clq/.col/.dimacs, .mtx, .txt/.el/.edges/.tsv).
std::optional<FileFormat> format_from_extension(const std::filesystem::path& p);

/// DIMACS ASCII clique format: `c` comments, one `p edge <n> <m>` header,
/// `e <u> <v>` lines with 1-based ids. Ids come back 0-based.
EdgeList parse_dimacs(std::istream& in);

/// Whitespace-separated pairs with `#` (or `%`) comment lines. When no header
/// is given, n is one more than the largest id seen.
EdgeList parse_edge_list(std::istream& in, int base = 0);

/// Matrix Market coordinate format, pattern/integer/real values (ignored),
/// general/symmetric/skew-symmetric. Diagonal entries are dropped.
EdgeList parse_matrix_market(std::istream& in);

EdgeList parse(std::istream& in, FileFormat f);

void write_dimacs(std::ostream& out, const Graph& g);
void write_edge_list(std::ostream& out, const Graph& g);
void write_matrix_market(std::ostream& out, const Graph& g);
void write(std::ostream& out, const Graph& g, FileFormat f);

/// Reads and normalizes a graph file; the format is taken from the extension
/// when not given. Throws FileNotReadable when the file cannot be opened.
Graph load_graph(const std::filesystem::path& p, std::optional<FileFormat> f = std::nullopt);
void save_graph(const std::filesystem::path& p, const Graph& g, FileFormat f);

class FileNotReadable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mclique
