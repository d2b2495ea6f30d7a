#include "mclique/baseline.hpp"

#include <bit>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "incumbent.hpp"
#include "search.hpp"

namespace mclique {

CliqueResult max_clique_cp(const Graph& g, std::optional<double> time_limit) {
  detail::SearchOptions opts;
  opts.seed_degree_filter = false;
  opts.neighbor_degree_filter = false;
  opts.intersection_degree_filter = false;
  opts.time_limit = time_limit;
  return detail::branch_and_bound(g, opts);
}

namespace {

struct Enumerator {
  std::vector<std::uint32_t> adjacency;
  std::uint32_t best_set = 0;
  int best_size = 0;
  std::uint64_t nodes = 0;

  // Every clique is reached exactly once: `clique` is extended only by
  // candidates above its highest member.
  void extend(std::uint32_t clique, int size, std::uint32_t candidates) {
    ++nodes;
    if (size > best_size) {
      best_size = size;
      best_set = clique;
    }
    while (candidates) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      extend(clique | (1u << v), size + 1, candidates & adjacency[static_cast<std::size_t>(v)]);
    }
  }
};

}  // namespace

CliqueResult brute_force(const Graph& g) {
  const auto n = g.num_vertices();
  if (n > kBruteForceMaxVertices)
    throw BruteForceRefused("brute force is limited to " + std::to_string(kBruteForceMaxVertices) +
                            " vertices, graph has " + std::to_string(n));
  const auto start = std::chrono::steady_clock::now();
  Enumerator e;
  e.adjacency.assign(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) e.adjacency[v] |= 1u << w;
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  e.extend(0, 0, all);

  CliqueResult r;
  r.size = static_cast<std::size_t>(e.best_size);
  for (Vertex v = 0; v < n; ++v)
    if (e.best_set & (1u << v)) r.witness.push_back(v);
  r.nodes = e.nodes;
  r.elapsed = detail::seconds_since(start);
  return r;
}

}  // namespace mclique
