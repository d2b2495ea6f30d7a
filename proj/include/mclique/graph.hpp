#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mclique {

using Vertex = std::uint32_t;

/// Raised by the parsers and by normalize() on malformed input. `line()` is
/// 1-based, or 0 when the error is not tied to a particular input line.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input that is well-formed but describes something we do not read
/// (complex or dense Matrix Market, unknown format names).
class UnsupportedFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw ingestion staging: pairs as they appeared in the input, possibly with
/// duplicates, self-loops and both orientations.
struct EdgeList {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending, contain no self-loops or duplicates,
/// and are symmetric. Safe to share read-only across threads.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check(v);
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const {
    check(v);
    return offsets_[v + 1] - offsets_[v];
  }

  std::size_t max_degree() const noexcept { return max_degree_; }

  /// O(log d(u)) membership test on the sorted list.
  bool has_edge(Vertex u, Vertex v) const;

  /// Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const;

  std::span<const std::size_t> offsets() const noexcept { return offsets_; }
  std::span<const Vertex> adjacency() const noexcept { return adjacency_; }

  friend bool operator==(const Graph&, const Graph&) = default;

  friend Graph normalize(const EdgeList& raw);

 private:
  void check(Vertex v) const {
    if (v >= num_vertices())
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                              std::to_string(num_vertices()) + ")");
  }

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::size_t max_degree_ = 0;
};

/// Drops self-loops, collapses duplicates and symmetrizes. Throws FormatError
/// naming the offending pair when an id is not below `raw.n`.
Graph normalize(const EdgeList& raw);

/// Convenience for tests and generators.
Graph make_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
Graph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

/// Induced subgraph on `keep` (any order); vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace mclique
