#include <gtest/gtest.h>

#include "mclique/rmat.hpp"

using namespace mclique;

namespace {

RmatParams preset(const char* name, unsigned scale, std::uint64_t seed) {
  auto p = family_preset(name);
  p.scale = scale;
  p.seed = seed;
  return p;
}

}  // namespace

TEST(Rmat, Presets) {
  const auto all = family_presets();
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].name, "rmat_er");
  EXPECT_EQ(all[1].name, "rmat_sd1");
  EXPECT_EQ(all[2].name, "rmat_sd2");
  auto same = [](const RmatParams& p, double a, double b, double c, double d) {
    return p.a == a && p.b == b && p.c == c && p.d == d && p.edge_factor == 8;
  };
  EXPECT_TRUE(same(family_preset("rmat_er"), 0.25, 0.25, 0.25, 0.25));
  EXPECT_TRUE(same(family_preset("rmat_sd1"), 0.45, 0.15, 0.15, 0.25));
  EXPECT_TRUE(same(family_preset("rmat_sd2"), 0.55, 0.15, 0.15, 0.15));
  EXPECT_TRUE(same(family_preset("sd2"), 0.55, 0.15, 0.15, 0.15));
  EXPECT_THROW(family_preset("rmat_sd3"), std::invalid_argument);
}

TEST(Rmat, Validation) {
  RmatParams p;
  EXPECT_NO_THROW(p.validate());
  p.a = 0.3;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = RmatParams{};
  p.a = -0.25;
  p.b = 0.75;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = RmatParams{};
  p.scale = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  EXPECT_THROW(generate_rmat(p), std::invalid_argument);
  p.scale = 32;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Rmat, Deterministic) {
  for (const char* f : {"er", "sd1", "sd2"}) {
    EXPECT_EQ(generate_rmat(preset(f, 12, 5)), generate_rmat(preset(f, 12, 5)));
    EXPECT_EQ(generate_rmat(preset(f, 12, 5), 4), generate_rmat(preset(f, 12, 5), 4));
    EXPECT_NE(generate_rmat(preset(f, 12, 5)), generate_rmat(preset(f, 12, 6)));
  }
}

TEST(Rmat, TinyScale) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RmatParams p;
    p.scale = 1;
    p.edge_factor = 1;
    p.seed = seed;
    const Graph g = generate_rmat(p);
    EXPECT_EQ(g.num_vertices(), 2u);
    EXPECT_LE(g.num_edges(), 1u);
  }
}

TEST(Rmat, EdgeCountBoundedByDraws) {
  for (const char* f : {"er", "sd1", "sd2"})
    for (unsigned scale : {4u, 8u, 12u}) {
      const auto p = preset(f, scale, scale);
      const Graph g = generate_rmat(p);
      EXPECT_EQ(g.num_vertices(), std::size_t{1} << scale);
      EXPECT_LE(g.num_edges(), p.edge_factor << scale);
      std::size_t total = 0;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto nv = g.neighbors(v);
        total += nv.size();
        EXPECT_TRUE(std::is_sorted(nv.begin(), nv.end()));
        for (Vertex w : nv) EXPECT_NE(v, w);
      }
      EXPECT_EQ(total, 2 * g.num_edges());
    }
}

TEST(Rmat, ZeroProbabilityQuadrantsStayEmpty) {
  // all mass on quadrant a: every draw is (0, 0), a self-loop
  RmatParams p{1.0, 0.0, 0.0, 0.0, 6, 8, 1};
  EXPECT_EQ(generate_rmat(p).num_edges(), 0u);
  // all mass on b: u stays 0, v gets every bit, so only (0, n-1)
  RmatParams q{0.0, 1.0, 0.0, 0.0, 6, 8, 1};
  const Graph g = generate_rmat(q);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.has_edge(0, 63));
}

TEST(Rmat, Scale17ErEdgeBand) {
  const Graph g = generate_rmat(preset("er", 17, 1));
  EXPECT_EQ(g.num_vertices(), 131072u);
  EXPECT_GE(g.num_edges(), 1030000u);
  EXPECT_LE(g.num_edges(), 1049000u);
}

TEST(Rmat, SkewedFamilyHasMuchLargerMaxDegree) {
  const Graph er = generate_rmat(preset("er", 17, 2));
  const Graph sd2 = generate_rmat(preset("sd2", 17, 2));
  EXPECT_GE(sd2.max_degree(), 10 * er.max_degree());
}
