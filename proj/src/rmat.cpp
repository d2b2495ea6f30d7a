#include "mclique/rmat.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace mclique {
namespace {

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void draw(const RmatParams& p, std::uint64_t count, std::uint64_t seed,
          std::vector<std::pair<Vertex, Vertex>>& out) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double ab = p.a + p.b;
  const double abc = ab + p.c;
  out.reserve(out.size() + count);
  for (std::uint64_t e = 0; e < count; ++e) {
    Vertex u = 0, v = 0;
    for (unsigned level = 0; level < p.scale; ++level) {
      const double r = uniform(rng);
      u <<= 1;
      v <<= 1;
      if (r < p.a) {
      } else if (r < ab) {
        v |= 1;
      } else if (r < abc) {
        u |= 1;
      } else {
        u |= 1;
        v |= 1;
      }
    }
    out.emplace_back(u, v);
  }
}

}  // namespace

void RmatParams::validate() const {
  for (double q : {a, b, c, d})
    if (!(q >= 0.0)) throw std::invalid_argument("R-MAT probabilities must be non-negative");
  if (std::abs(a + b + c + d - 1.0) > 1e-9)
    throw std::invalid_argument("R-MAT probabilities must sum to 1");
  if (scale < 1 || scale > 31) throw std::invalid_argument("R-MAT scale must be in [1, 31]");
}

std::vector<RmatFamily> family_presets() {
  return {
      {"rmat_er", {0.25, 0.25, 0.25, 0.25, 1, 8, 0}},
      {"rmat_sd1", {0.45, 0.15, 0.15, 0.25, 1, 8, 0}},
      {"rmat_sd2", {0.55, 0.15, 0.15, 0.15, 1, 8, 0}},
  };
}

RmatParams family_preset(std::string_view name) {
  if (name.starts_with("rmat_")) name.remove_prefix(5);
  for (const auto& f : family_presets())
    if (std::string_view(f.name).substr(5) == name) return f.params;
  throw std::invalid_argument("unknown R-MAT family '" + std::string(name) + "'");
}

Graph generate_rmat(const RmatParams& p, unsigned threads) {
  p.validate();
  threads = std::max(1u, threads);
  const std::uint64_t total = p.edge_factor << p.scale;
  EdgeList raw;
  raw.n = std::size_t{1} << p.scale;

  if (threads == 1) {
    draw(p, total, stream_seed(p.seed, 0), raw.edges);
  } else {
    std::vector<std::vector<std::pair<Vertex, Vertex>>> parts(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t count = total / threads + (t < total % threads ? 1 : 0);
        pool.emplace_back([&, t, count] { draw(p, count, stream_seed(p.seed, t), parts[t]); });
      }
    }
    raw.edges.reserve(total);
    for (auto& part : parts) raw.edges.insert(raw.edges.end(), part.begin(), part.end());
  }
  return normalize(raw);
}

}  // namespace mclique
