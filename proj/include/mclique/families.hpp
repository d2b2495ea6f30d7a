#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mclique/graph.hpp"

namespace mclique {

// Deterministic constructions of the structured DIMACS clique benchmarks.
// Vertex labels follow the natural enumeration order of each family, which
// need not match the label order of the distributed .clq files; structure
// (n, m, max degree, clique number) does.

/// Words of `bits` bits, adjacent when their Hamming distance is at least
/// `min_distance` (hamming6-2, hamming6-4, hamming8-2, ...).
Graph hamming_graph(unsigned bits, unsigned min_distance);

/// Weight-`weight` words of length `length` in lexicographic subset order,
/// adjacent at Hamming distance >= `min_distance` (johnson8-4-4, ...).
Graph johnson_graph(unsigned length, unsigned weight, unsigned min_distance);

/// n vertices in k = floor(n / (c ln n)) clusters, vertex i in cluster
/// i mod k; vertices are adjacent within a cluster and across cyclically
/// consecutive clusters (c-fat200-5, ...).
Graph c_fat_graph(unsigned n, unsigned c);

/// Neighborhood of a vertex in the Keller graph of dimension `dim`: vectors
/// over Z4 with some coordinate 2, excluding the `dim` vectors with a single
/// nonzero coordinate. Two vectors are adjacent when they differ in at least
/// two coordinates and differ by exactly 2 in at least one (keller4 is dim 4).
/// Vectors are labeled lexicographically with coordinate values ordered
/// 1, 2, 3, 0.
Graph keller_graph(unsigned dim);

/// Clique formulation of covering the lines of AG(dim, 3), the Steiner
/// triple system on 3^dim points: one vertex per (line, point-on-line) and one
/// per point. Non-adjacent pairs are two vertices of the same line, and a
/// (line, p) vertex with point p. MANN_a9 is dim 2, MANN_a27 is dim 3.
Graph mann_graph(unsigned dim);

struct NamedInstance {
  std::string name;
  std::size_t n;
  std::size_t m;
  /// Published clique number.
  std::size_t omega;
};

/// The DIMACS instances constructible here, with their published sizes.
const std::vector<NamedInstance>& constructible_instances();

/// Builds a named instance ("keller4", "c-fat200-5", ...), or nullopt.
std::optional<Graph> construct_instance(std::string_view name);

}  // namespace mclique
