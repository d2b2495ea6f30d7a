#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mclique/graph.hpp"

namespace mclique {

/// Recursive-matrix generator parameters. At each of `scale` levels an edge
/// draw descends into quadrant a (top-left), b, c or d (bottom-right).
struct RmatParams {
  double a = 0.25;
  double b = 0.25;
  double c = 0.25;
  double d = 0.25;
  unsigned scale = 1;
  std::uint64_t edge_factor = 8;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless the probabilities are non-negative
  /// and sum to 1 within 1e-9, and scale is in [1, 31].
  void validate() const;
};

struct RmatFamily {
  std::string name;
  RmatParams params;
};

/// rmat_er (0.25,0.25,0.25,0.25), rmat_sd1 (0.45,0.15,0.15,0.25) and
/// rmat_sd2 (0.55,0.15,0.15,0.15), each with edge factor 8.
std::vector<RmatFamily> family_presets();

/// Accepts "er", "sd1", "sd2" with or without the "rmat_" prefix.
RmatParams family_preset(std::string_view name);

/// Draws edge_factor * 2^scale directed pairs and normalizes them, so
/// duplicates and self-loops are discarded rather than redrawn. Deterministic
/// per (params, threads); different thread counts partition the draws into
/// different random streams.
Graph generate_rmat(const RmatParams& p, unsigned threads = 1);

}  // namespace mclique
