#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <numeric>

#include "incumbent.hpp"

namespace mclique::detail {
namespace {

constexpr std::uint64_t kDeadlineCheckMask = (1u << 16) - 1;

class Searcher {
 public:
  Searcher(const Graph& g, const SearchOptions& opts, Incumbent& incumbent, Deadline& deadline,
           std::span<const Vertex> position, std::span<const std::uint32_t> neighbor_degrees)
      : g_(g),
        opts_(opts),
        incumbent_(incumbent),
        deadline_(deadline),
        position_(position),
        neighbor_degrees_(neighbor_degrees),
        levels_(g.max_degree() + 2) {
    current_.reserve(g.max_degree() + 1);
  }

  void seed(Vertex v) {
    const std::size_t best = incumbent_.size();
    if (opts_.seed_degree_filter && g_.degree(v) < best) {
      ++stats_.p1;
      return;
    }
    auto& candidates = levels_[0];
    candidates.clear();
    const Vertex rank = position_[v];
    for (Vertex w : g_.neighbors(v)) {
      if (position_[w] <= rank) {
        ++stats_.p2;
      } else if (opts_.neighbor_degree_filter && g_.degree(w) < best) {
        ++stats_.p3;
      } else {
        candidates.push_back(w);
      }
    }
    current_.assign(1, v);
    extend(0);
  }

  const PruneStats& stats() const { return stats_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void extend(std::size_t depth) {
    if ((++nodes_ & kDeadlineCheckMask) == 0) deadline_.expired();
    if (deadline_.stopped()) return;

    const auto& candidates = levels_[depth];
    if (candidates.empty()) {
      incumbent_.offer(current_);
      return;
    }
    const std::size_t size = current_.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const std::size_t best = incumbent_.size();
      if (size + (candidates.size() - i) <= best) {
        ++stats_.p4;
        return;
      }
      const Vertex u = candidates[i];
      auto& next = levels_[depth + 1];
      next.clear();
      intersect(std::span(candidates).subspan(i + 1), u, best, next);
      current_.push_back(u);
      extend(depth + 1);
      current_.pop_back();
      if (deadline_.stopped()) return;
    }
  }

  // out = rest ∩ N'(u), where N'(u) drops neighbors of degree below `best`
  // when the intersection filter is on.
  void intersect(std::span<const Vertex> rest, Vertex u, std::size_t best,
                 std::vector<Vertex>& out) {
    const auto nu = g_.neighbors(u);
    const bool filter = opts_.intersection_degree_filter;
    if (filter) stats_.p5 += count_low_degree_neighbors(g_, neighbor_degrees_, u, best);
    if (rest.empty()) return;
    auto keep = [&](Vertex w) { return !filter || g_.degree(w) >= best; };

    if (rest.size() * 8 < nu.size()) {
      for (Vertex w : rest)
        if (std::binary_search(nu.begin(), nu.end(), w) && keep(w)) out.push_back(w);
      return;
    }
    auto a = rest.begin();
    auto b = nu.begin();
    while (a != rest.end() && b != nu.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        if (keep(*a)) out.push_back(*a);
        ++a;
        ++b;
      }
    }
  }

  const Graph& g_;
  const SearchOptions& opts_;
  Incumbent& incumbent_;
  Deadline& deadline_;
  std::span<const Vertex> position_;
  std::span<const std::uint32_t> neighbor_degrees_;

  std::vector<std::vector<Vertex>> levels_;
  std::vector<Vertex> current_;
  PruneStats stats_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<std::uint32_t> sorted_neighbor_degrees(const Graph& g) {
  std::vector<std::uint32_t> out(g.adjacency().size());
  const auto off = g.offsets();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto first = out.begin() + static_cast<std::ptrdiff_t>(off[v]);
    auto last = out.begin() + static_cast<std::ptrdiff_t>(off[v + 1]);
    std::transform(g.neighbors(v).begin(), g.neighbors(v).end(), first,
                   [&](Vertex w) { return static_cast<std::uint32_t>(g.degree(w)); });
    std::sort(first, last);
  }
  return out;
}

std::size_t count_low_degree_neighbors(const Graph& g, std::span<const std::uint32_t> sorted_degrees,
                                       Vertex u, std::size_t threshold) {
  if (threshold == 0) return 0;
  const auto off = g.offsets();
  auto first = sorted_degrees.begin() + static_cast<std::ptrdiff_t>(off[u]);
  auto last = sorted_degrees.begin() + static_cast<std::ptrdiff_t>(off[u + 1]);
  const auto bound = static_cast<std::uint32_t>(std::min<std::size_t>(threshold, UINT32_MAX));
  return static_cast<std::size_t>(std::lower_bound(first, last, bound) - first);
}

CliqueResult branch_and_bound(const Graph& g, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Deadline deadline(opts.time_limit);
  Incumbent incumbent(opts.lb);

  const auto position = ordering_positions(g, opts.ordering);
  std::vector<Vertex> order(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) order[position[v]] = v;
  const auto neighbor_degrees =
      opts.intersection_degree_filter ? sorted_neighbor_degrees(g) : std::vector<std::uint32_t>{};

  const unsigned threads = std::max(1u, opts.threads);
  std::vector<PruneStats> stats(threads);
  std::vector<std::uint64_t> nodes(threads, 0);
  std::atomic<std::size_t> next{0};

  run_workers(threads, [&](unsigned t) {
    Searcher searcher(g, opts, incumbent, deadline, position, neighbor_degrees);
    for (std::size_t k; (k = next.fetch_add(1, std::memory_order_relaxed)) < order.size();) {
      if (deadline.expired()) break;
      searcher.seed(order[k]);
    }
    stats[t] = searcher.stats();
    nodes[t] = searcher.nodes();
  });

  CliqueResult r;
  r.size = incumbent.size();
  r.witness = incumbent.witness();
  for (unsigned t = 0; t < threads; ++t) {
    r.stats += stats[t];
    r.nodes += nodes[t];
  }
  r.exact = !deadline.stopped();
  r.lb_unverified = r.size > 0 && r.witness.empty();
  r.elapsed = seconds_since(start);
  return r;
}

}  // namespace mclique::detail
