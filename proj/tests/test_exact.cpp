#include <gtest/gtest.h>

#include <algorithm>

#include "mclique/exact.hpp"
#include "mclique/families.hpp"
#include "oracle.hpp"

using namespace mclique;

namespace {

// Literal transcription of the search with plain vectors, used to check the
// counters of the optimized implementation (natural order, one thread).
struct ReferenceSearch {
  const Graph& g;
  std::size_t max = 0;
  PruneStats st;

  void clique(std::vector<Vertex> u_set, std::size_t size) {
    if (u_set.empty()) {
      max = std::max(max, size);
      return;
    }
    while (!u_set.empty()) {
      if (size + u_set.size() <= max) {
        ++st.p4;
        return;
      }
      const Vertex u = u_set.front();
      u_set.erase(u_set.begin());
      std::vector<Vertex> n_prime;
      for (Vertex w : g.neighbors(u)) {
        if (g.degree(w) >= max)
          n_prime.push_back(w);
        else
          ++st.p5;
      }
      std::vector<Vertex> next;
      for (Vertex w : u_set)
        if (std::find(n_prime.begin(), n_prime.end(), w) != n_prime.end()) next.push_back(w);
      clique(next, size + 1);
    }
  }

  void run() {
    for (Vertex i = 0; i < g.num_vertices(); ++i) {
      if (g.degree(i) < max) {
        ++st.p1;
        continue;
      }
      std::vector<Vertex> u_set;
      for (Vertex j : g.neighbors(i)) {
        if (j < i)
          ++st.p2;
        else if (g.degree(j) < max)
          ++st.p3;
        else
          u_set.push_back(j);
      }
      clique(u_set, 1);
    }
  }
};

void expect_sound(const Graph& g, const CliqueResult& r) {
  EXPECT_EQ(r.witness.size(), r.size);
  EXPECT_TRUE(std::is_sorted(r.witness.begin(), r.witness.end()));
  EXPECT_TRUE(verify_clique(g, r.witness));
  EXPECT_TRUE(oracle::is_clique(g, r.witness));
}

}  // namespace

TEST(Exact, CompleteGraph) {
  const Graph k3 = oracle::complete(3);
  const auto r = max_clique(k3);
  EXPECT_EQ(r.size, 3u);
  EXPECT_TRUE(r.exact);
  expect_sound(k3, r);
}

TEST(Exact, K5ReachesFullDepth) {
  const auto r = max_clique(oracle::complete(5));
  EXPECT_EQ(r.size, 5u);
  EXPECT_EQ(r.witness, (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(Exact, PathHasCliqueNumberTwo) {
  const Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto r = max_clique(p4);
  EXPECT_EQ(r.size, 2u);
  expect_sound(p4, r);
}

TEST(Exact, PathCountersByHand) {
  // seed 0 finds {0,1}; seed 1 returns on the size bound; seed 2 drops 3 by
  // degree and 1 by order; seed 3 is skipped.
  const Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto r = max_clique(p4);
  EXPECT_EQ(r.stats, (PruneStats{1, 2, 1, 1, 0}));
}

TEST(Exact, EmptyAndEdgeless) {
  EXPECT_EQ(max_clique(Graph{}).size, 0u);
  const auto r = max_clique(make_graph(5, {}));
  EXPECT_EQ(r.size, 1u);
  EXPECT_EQ(r.witness.size(), 1u);
}

TEST(Exact, Hamming64) {
  const Graph g = hamming_graph(6, 4);
  const auto r = max_clique(g);
  EXPECT_EQ(r.size, 4u);
  expect_sound(g, r);
  EXPECT_EQ(r.stats.p1, 0u);
  EXPECT_EQ(r.stats.p2, 704u);
  EXPECT_EQ(r.stats.p3, 0u);
  EXPECT_EQ(r.stats.p5, 0u);
}

TEST(Exact, CountersMatchReferenceTranscription) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 40;
    const double p = 0.05 + 0.9 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(n, p, rng());
    ReferenceSearch ref{g, 0, {}};
    ref.run();
    const auto r = max_clique(g);
    EXPECT_EQ(r.size, ref.max) << "trial " << t;
    EXPECT_EQ(r.stats, ref.st) << "trial " << t << " p4 " << r.stats.p4 << " vs " << ref.st.p4
                               << " p5 " << r.stats.p5 << " vs " << ref.st.p5;
  }
}

TEST(Exact, OracleEquivalenceOnRandomGraphs) {
  int count = 0;
  for (double p : {0.2, 0.5, 0.8})
    for (std::uint64_t seed = 0; seed < 70; ++seed, ++count) {
      const std::size_t n = 1 + seed % 20;
      const Graph g = oracle::random_graph(n, p, seed * 31 + 7);
      const auto r = max_clique(g);
      ASSERT_EQ(r.size, oracle::clique_number(g)) << "n=" << n << " p=" << p << " seed=" << seed;
      expect_sound(g, r);
    }
  EXPECT_GE(count, 200);
}

TEST(Exact, CounterLawP2EqualsM) {
  // whenever nothing is dropped by the degree tests, each edge is excluded
  // exactly once by the order test
  int applicable = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = oracle::random_graph(5 + seed % 40, 0.1 + 0.8 * (seed % 9) / 8.0, seed);
    const auto r = max_clique(g);
    if (r.stats.p1 == 0 && r.stats.p3 == 0) {
      ++applicable;
      EXPECT_EQ(r.stats.p2, g.num_edges()) << "seed " << seed;
    }
  }
  // regular graphs always qualify
  for (const auto* name : {"hamming6-2", "hamming6-4", "johnson8-2-4", "johnson8-4-4"}) {
    const Graph g = *construct_instance(name);
    const auto r = max_clique(g);
    ASSERT_EQ(r.stats.p1, 0u) << name;
    ASSERT_EQ(r.stats.p3, 0u) << name;
    EXPECT_EQ(r.stats.p2, g.num_edges()) << name;
    ++applicable;
  }
  EXPECT_GT(applicable, 20);
}

TEST(Exact, LowerBoundDoesNotChangeSize) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = oracle::random_graph(18, 0.5, seed);
    const auto omega = oracle::clique_number(g);
    for (std::size_t lb = 0; lb <= omega; ++lb) {
      SolverConfig cfg;
      cfg.lb = lb;
      const auto r = max_clique(g, cfg);
      EXPECT_EQ(r.size, omega);
      EXPECT_TRUE(r.exact);
      if (!r.lb_unverified) expect_sound(g, r);
      // an lb equal to the optimum leaves nothing to find
      EXPECT_EQ(r.lb_unverified, lb == omega && lb > 0);
    }
  }
}

TEST(Exact, LowerBoundAboveOptimumIsFlagged) {
  const Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  SolverConfig cfg;
  cfg.lb = 3;
  const auto r = max_clique(g, cfg);
  EXPECT_EQ(r.size, 3u);
  EXPECT_TRUE(r.exact);
  EXPECT_TRUE(r.lb_unverified);
  EXPECT_TRUE(r.witness.empty());
}

TEST(Exact, OrderingDoesNotChangeSize) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = oracle::random_graph(30, 0.1 + 0.15 * (seed % 6), seed);
    SolverConfig deg;
    deg.ordering = Ordering::DegreeDescending;
    const auto a = max_clique(g);
    const auto b = max_clique(g, deg);
    EXPECT_EQ(a.size, b.size);
    expect_sound(g, b);
  }
  const Graph k = *construct_instance("johnson8-4-4");
  SolverConfig deg;
  deg.ordering = Ordering::DegreeDescending;
  EXPECT_EQ(max_clique(k, deg).size, 14u);
}

TEST(Exact, DegreeOrderingPositions) {
  // star centre first, leaves keep id order
  const Graph star = make_graph(5, {{3, 0}, {3, 1}, {3, 2}, {3, 4}});
  const auto pos = ordering_positions(star, Ordering::DegreeDescending);
  EXPECT_EQ(pos, (std::vector<Vertex>{1, 2, 3, 0, 4}));
  EXPECT_EQ(ordering_positions(star, Ordering::NaturalIndex), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  // centre first: its leaves are all later in the order, so nothing is
  // excluded by the order test; under id order 0-3 is found first and the
  // centre sees three earlier leaves
  SolverConfig deg;
  deg.ordering = Ordering::DegreeDescending;
  const auto r = max_clique(star, deg);
  EXPECT_EQ(r.size, 2u);
  EXPECT_EQ(r.stats, (PruneStats{4, 0, 0, 1, 0}));
  EXPECT_EQ(max_clique(star).stats, (PruneStats{3, 3, 1, 0, 0}));
}

TEST(Exact, ParallelSizeIsDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = oracle::random_graph(60, 0.3 + 0.02 * seed, seed);
    const auto one = max_clique(g);
    for (unsigned t : {2u, 3u, 8u}) {
      SolverConfig cfg;
      cfg.threads = t;
      const auto r = max_clique(g, cfg);
      EXPECT_EQ(r.size, one.size) << "threads " << t;
      expect_sound(g, r);
    }
  }
}

TEST(Exact, TimeLimitReturnsBestSoFar) {
  const Graph g = *construct_instance("hamming8-2");
  SolverConfig cfg;
  cfg.time_limit = 0.2;
  const auto r = max_clique(g, cfg);
  EXPECT_FALSE(r.exact);
  EXPECT_GT(r.size, 0u);
  EXPECT_LE(r.size, 128u);
  expect_sound(g, r);
  EXPECT_LT(r.elapsed, 5.0);

  cfg.time_limit = 0.0;
  EXPECT_FALSE(max_clique(g, cfg).exact);
}

TEST(Exact, InvalidConfig) {
  const Graph g = oracle::complete(3);
  SolverConfig cfg;
  cfg.threads = 0;
  EXPECT_THROW(max_clique(g, cfg), std::invalid_argument);
  cfg.threads = 1;
  cfg.time_limit = -1.0;
  EXPECT_THROW(max_clique(g, cfg), std::invalid_argument);
}

TEST(VerifyClique, Examples) {
  const Graph k3 = oracle::complete(3);
  EXPECT_TRUE(verify_clique(k3, std::vector<Vertex>{0, 1, 2}));
  const Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(verify_clique(p3, std::vector<Vertex>{0, 2}));
  EXPECT_TRUE(verify_clique(p3, std::vector<Vertex>{}));
  EXPECT_FALSE(verify_clique(k3, std::vector<Vertex>{1, 1}));
  EXPECT_THROW(verify_clique(k3, std::vector<Vertex>{0, 5}), std::out_of_range);
}
