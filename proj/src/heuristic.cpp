#include "mclique/heuristic.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <random>
#include <string_view>

#include "incumbent.hpp"
#include "search.hpp"

namespace mclique {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// First vertex of maximum degree; `candidates` is sorted so that is the
// lowest id among the ties.
std::size_t max_degree_index(const Graph& g, std::span<const Vertex> candidates) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (g.degree(candidates[i]) > g.degree(candidates[best])) best = i;
  return best;
}

// next = (candidates \ {u}) ∩ N(u), restricted to degree >= threshold.
void shrink(const Graph& g, std::span<const Vertex> candidates, Vertex u, std::size_t threshold,
            std::vector<Vertex>& next) {
  next.clear();
  const auto nu = g.neighbors(u);
  auto b = nu.begin();
  for (Vertex w : candidates) {
    if (w == u) continue;
    b = std::lower_bound(b, nu.end(), w);
    if (b == nu.end()) break;
    if (*b == w && g.degree(w) >= threshold) next.push_back(w);
  }
}

}  // namespace

CliqueResult max_clique_heuristic(const Graph& g, const SelectionPolicy& policy, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  detail::Incumbent incumbent(0);
  const auto neighbor_degrees = detail::sorted_neighbor_degrees(g);
  threads = std::max(1u, threads);
  std::vector<PruneStats> stats(threads);
  std::vector<std::uint64_t> nodes(threads, 0);
  std::atomic<std::size_t> next_seed{0};

  detail::run_workers(threads, [&](unsigned t) {
    PruneStats& st = stats[t];
    std::vector<Vertex> candidates, next, current;
    for (std::size_t k; (k = next_seed.fetch_add(1, std::memory_order_relaxed)) < g.num_vertices();) {
      const auto v = static_cast<Vertex>(k);
      std::size_t best = incumbent.size();
      if (g.degree(v) < best) {
        ++st.p1;
        continue;
      }
      candidates.clear();
      for (Vertex w : g.neighbors(v)) {
        if (g.degree(w) < best)
          ++st.p3;
        else
          candidates.push_back(w);
      }
      std::mt19937_64 rng(splitmix64(policy.seed ^ splitmix64(v)));
      current.assign(1, v);
      for (;;) {
        ++nodes[t];
        if (candidates.empty()) {
          incumbent.offer(current);
          break;
        }
        std::size_t pick;
        if (policy.kind == SelectionPolicy::Kind::MaxDegree) {
          pick = max_degree_index(g, candidates);
        } else {
          pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng);
        }
        const Vertex u = candidates[pick];
        best = incumbent.size();
        st.p5 += detail::count_low_degree_neighbors(g, neighbor_degrees, u, best);
        shrink(g, candidates, u, best, next);
        current.push_back(u);
        std::swap(candidates, next);
      }
    }
  });

  CliqueResult r;
  r.size = incumbent.size();
  r.witness = incumbent.witness();
  for (unsigned t = 0; t < threads; ++t) {
    r.stats += stats[t];
    r.nodes += nodes[t];
  }
  r.exact = false;
  r.elapsed = detail::seconds_since(start);
  return r;
}

std::vector<std::vector<Vertex>> largest_clique_per_vertex(const Graph& g, unsigned threads) {
  std::vector<std::vector<Vertex>> out(g.num_vertices());
  std::atomic<std::size_t> next_seed{0};
  detail::run_workers(std::max(1u, threads), [&](unsigned) {
    std::vector<Vertex> candidates, next;
    for (std::size_t k; (k = next_seed.fetch_add(1, std::memory_order_relaxed)) < g.num_vertices();) {
      const auto v = static_cast<Vertex>(k);
      auto nv = g.neighbors(v);
      candidates.assign(nv.begin(), nv.end());
      std::vector<Vertex> clique{v};
      while (!candidates.empty()) {
        const Vertex u = candidates[max_degree_index(g, candidates)];
        shrink(g, candidates, u, 0, next);
        clique.push_back(u);
        std::swap(candidates, next);
      }
      std::sort(clique.begin(), clique.end());
      out[v] = std::move(clique);
    }
  });
  return out;
}

void write_per_vertex_cliques(std::ostream& out, const std::vector<std::vector<Vertex>>& cliques) {
  for (std::size_t v = 0; v < cliques.size(); ++v) {
    out << v << ':';
    for (Vertex w : cliques[v]) out << ' ' << w;
    out << '\n';
  }
}

ScalingSample heuristic_scaling_probe(const Graph& g) {
  ScalingSample s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  s.max_degree = g.max_degree();
  const auto start = std::chrono::steady_clock::now();
  const auto r = max_clique_heuristic(g);
  s.elapsed = detail::seconds_since(start);
  s.size = r.size;
  return s;
}

void write_scaling_csv_header(std::ostream& out) { out << "graph,n,m,max_degree,elapsed,size\n"; }

void write_scaling_csv_row(std::ostream& out, std::string_view name, const ScalingSample& s) {
  out << name << ',' << s.n << ',' << s.m << ',' << s.max_degree << ',' << s.elapsed << ','
      << s.size << '\n';
}

}  // namespace mclique
