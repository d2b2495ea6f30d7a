#include "mclique/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "search.hpp"

namespace mclique {

std::vector<Vertex> ordering_positions(const Graph& g, Ordering ordering) {
  const auto n = g.num_vertices();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  if (ordering == Ordering::DegreeDescending)
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<Vertex> position(n);
  for (Vertex k = 0; k < n; ++k) position[order[k]] = k;
  return position;
}

CliqueResult max_clique(const Graph& g, const SolverConfig& cfg) {
  if (cfg.threads == 0) throw std::invalid_argument("threads must be at least 1");
  if (cfg.time_limit && !(*cfg.time_limit >= 0.0))
    throw std::invalid_argument("time limit must be non-negative");
  detail::SearchOptions opts;
  opts.ordering = cfg.ordering;
  opts.lb = cfg.lb;
  opts.threads = cfg.threads;
  opts.time_limit = cfg.time_limit;
  return detail::branch_and_bound(g, opts);
}

bool verify_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.num_vertices()) throw std::out_of_range("verify_clique: vertex out of range");
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  }
  return true;
}

}  // namespace mclique
