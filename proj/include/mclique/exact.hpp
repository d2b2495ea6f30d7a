#pragma once

#include <cstddef>
#include <optional>

#include "mclique/graph.hpp"
#include "mclique/result.hpp"

namespace mclique {

enum class Ordering {
  /// Vertices in id order.
  NaturalIndex,
  /// Highest degree first, ties by lower id.
  DegreeDescending,
};

struct SolverConfig {
  /// Initial incumbent size. If positive, the caller asserts a clique of this
  /// size exists.
  std::size_t lb = 0;
  Ordering ordering = Ordering::NaturalIndex;
  unsigned threads = 1;
  /// Wall-clock budget in seconds.
  std::optional<double> time_limit;
};

/// Exact maximum clique by per-vertex branch and bound with hierarchical
/// degree-based pruning.
///
/// For each seed vertex (in `cfg.ordering`) the candidate set is the seed's
/// later-ordered neighbors whose degree is at least the incumbent size; the
/// recursion then takes candidates lowest-id first, backtracking once the
/// partial clique plus every remaining candidate cannot beat the incumbent.
/// All degree tests use degrees in `g`.
///
/// With `cfg.threads > 1` seeds are distributed dynamically over workers that
/// share the incumbent. The returned size does not depend on the thread count;
/// the witness and the counters may.
CliqueResult max_clique(const Graph& g, const SolverConfig& cfg = {});

/// Vertex positions for an ordering policy: result[v] is v's rank.
std::vector<Vertex> ordering_positions(const Graph& g, Ordering ordering);

}  // namespace mclique
