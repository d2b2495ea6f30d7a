#pragma once

#include <optional>
#include <stdexcept>

#include "mclique/graph.hpp"
#include "mclique/result.hpp"

namespace mclique {

/// Carraghan-Pardalos: per-vertex depth-first search keeping only the
/// processed-vertex exclusion and the size-bound backtrack. Runs on the same
/// search skeleton as max_clique() with the degree filters switched off, so
/// p1 = p3 = p5 = 0.
CliqueResult max_clique_cp(const Graph& g, std::optional<double> time_limit = std::nullopt);

inline constexpr std::size_t kBruteForceMaxVertices = 30;

class BruteForceRefused : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unpruned enumeration of every clique. Refuses graphs with more than
/// kBruteForceMaxVertices vertices.
CliqueResult brute_force(const Graph& g);

}  // namespace mclique
