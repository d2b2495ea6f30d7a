#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "mclique/graph.hpp"
#include "mclique/result.hpp"

namespace mclique {

/// How the heuristic picks the next vertex from its candidate set.
struct SelectionPolicy {
  enum class Kind { MaxDegree, UniformRandom };

  Kind kind = Kind::MaxDegree;
  /// Only used by UniformRandom.
  std::uint64_t seed = 0;

  static SelectionPolicy max_degree() { return {}; }
  static SelectionPolicy uniform_random(std::uint64_t seed) { return {Kind::UniformRandom, seed}; }
};

/// Follows a single greedy path per seed vertex: repeatedly take the
/// candidate of highest degree in `g` (lowest id on ties, or a uniformly
/// random one under UniformRandom) and shrink the candidates to its
/// neighborhood. Seeds and candidates whose degree is below the running best
/// are skipped, as in the exact search; p2 and p4 stay zero.
///
/// The result is a verified clique, so its size is a lower bound on the
/// clique number; `exact` is always false. Output is deterministic for a given graph and policy when
/// `threads` is 1.
CliqueResult max_clique_heuristic(const Graph& g, const SelectionPolicy& policy = {},
                                  unsigned threads = 1);

/// For every vertex, the clique found by the max-degree path seeded at that
/// vertex with no degree filtering. result[v] is sorted and contains v.
std::vector<std::vector<Vertex>> largest_clique_per_vertex(const Graph& g, unsigned threads = 1);

/// Writes `v: c1 c2 ... ck` per vertex.
void write_per_vertex_cliques(std::ostream& out, const std::vector<std::vector<Vertex>>& cliques);

struct ScalingSample {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  double elapsed = 0.0;
  std::size_t size = 0;
};

/// Times one max-degree heuristic run.
ScalingSample heuristic_scaling_probe(const Graph& g);

void write_scaling_csv_header(std::ostream& out);
void write_scaling_csv_row(std::ostream& out, std::string_view name, const ScalingSample& s);

}  // namespace mclique
