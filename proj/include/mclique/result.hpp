#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mclique/graph.hpp"

namespace mclique {

/// Event counters for the five pruning steps of the exact search.
///
///  p1  main-loop seed vertices skipped because d(v) < max
///  p2  neighbors excluded because they precede the seed in processing order
///  p3  neighbors excluded from the candidate set because d(w) < max
///  p4  early returns of the recursion because size + |U| <= max
///  p5  neighbors w of the selected vertex u dropped from N'(u) because d(w) < max
struct PruneStats {
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;
  std::uint64_t p3 = 0;
  std::uint64_t p4 = 0;
  std::uint64_t p5 = 0;

  PruneStats& operator+=(const PruneStats& o) {
    p1 += o.p1;
    p2 += o.p2;
    p3 += o.p3;
    p4 += o.p4;
    p5 += o.p5;
    return *this;
  }
  friend bool operator==(const PruneStats&, const PruneStats&) = default;
};

struct CliqueResult {
  std::size_t size = 0;
  /// Sorted ascending. Empty when size only reflects a caller-supplied lower
  /// bound that the search never improved on (see lb_unverified).
  std::vector<Vertex> witness;
  PruneStats stats;
  /// Invocations of the recursive extension step.
  std::uint64_t nodes = 0;
  double elapsed = 0.0;
  /// True when size is proven maximum. False for heuristic results and when
  /// the time limit stopped a search (size is then best-so-far).
  bool exact = true;
  /// Size came from lb and no clique larger than lb was found.
  bool lb_unverified = false;
};

/// True iff all pairs in `s` are adjacent in `g`. Repeated ids are rejected.
bool verify_clique(const Graph& g, std::span<const Vertex> s);

}  // namespace mclique
