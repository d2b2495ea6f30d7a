#pragma once

// Branch-and-bound skeleton shared by the exact solver and the
// Carraghan-Pardalos baseline. The two differ only in which degree filters
// are switched on.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mclique/exact.hpp"

namespace mclique::detail {

struct SearchOptions {
  bool seed_degree_filter = true;          // Pruning 1
  bool neighbor_degree_filter = true;      // Pruning 3
  bool intersection_degree_filter = true;  // Pruning 5
  Ordering ordering = Ordering::NaturalIndex;
  std::size_t lb = 0;
  unsigned threads = 1;
  std::optional<double> time_limit;
};

CliqueResult branch_and_bound(const Graph& g, const SearchOptions& opts);

/// Degrees of each vertex's neighbors, sorted per vertex and laid out like
/// the adjacency array.
std::vector<std::uint32_t> sorted_neighbor_degrees(const Graph& g);

/// Number of neighbors of `u` with degree below `threshold`.
std::size_t count_low_degree_neighbors(const Graph& g, std::span<const std::uint32_t> sorted_degrees,
                                       Vertex u, std::size_t threshold);

}  // namespace mclique::detail
