#include "mclique/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace mclique {
namespace {

Graph from_predicate(std::size_t n, auto&& adjacent) {
  EdgeList raw;
  raw.n = n;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (adjacent(u, v)) raw.edges.emplace_back(u, v);
  return normalize(raw);
}

}  // namespace

Graph hamming_graph(unsigned bits, unsigned min_distance) {
  if (bits == 0 || bits > 20) throw std::invalid_argument("hamming_graph: bits must be in [1, 20]");
  return from_predicate(std::size_t{1} << bits, [&](Vertex u, Vertex v) {
    return static_cast<unsigned>(std::popcount(u ^ v)) >= min_distance;
  });
}

Graph johnson_graph(unsigned length, unsigned weight, unsigned min_distance) {
  if (length == 0 || length > 31 || weight > length)
    throw std::invalid_argument("johnson_graph: need 0 < length <= 31 and weight <= length");
  // Lexicographic order of subsets = order of their sorted element lists.
  std::vector<std::vector<unsigned>> subsets;
  std::vector<unsigned> pick(weight);
  for (unsigned i = 0; i < weight; ++i) pick[i] = i;
  for (;;) {
    subsets.push_back(pick);
    int i = static_cast<int>(weight) - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == length - weight + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (auto j = static_cast<std::size_t>(i) + 1; j < weight; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::vector<std::uint32_t> words;
  for (const auto& s : subsets) {
    std::uint32_t w = 0;
    for (unsigned e : s) w |= 1u << e;
    words.push_back(w);
  }
  return from_predicate(words.size(), [&](Vertex u, Vertex v) {
    return static_cast<unsigned>(std::popcount(words[u] ^ words[v])) >= min_distance;
  });
}

Graph c_fat_graph(unsigned n, unsigned c) {
  if (n < 3 || c == 0) throw std::invalid_argument("c_fat_graph: need n >= 3 and c >= 1");
  const auto k = static_cast<unsigned>(std::floor(n / (c * std::log(static_cast<double>(n)))));
  if (k == 0) throw std::invalid_argument("c_fat_graph: fewer than one cluster");
  return from_predicate(n, [&](Vertex u, Vertex v) {
    const unsigned d = (u % k + k - v % k) % k;
    return d == 0 || d == 1 || d == k - 1;
  });
}

Graph keller_graph(unsigned dim) {
  if (dim < 2 || dim > 7) throw std::invalid_argument("keller_graph: dim must be in [2, 7]");
  std::vector<std::vector<unsigned>> vectors;
  std::vector<unsigned> x(dim, 0);
  const std::size_t total = std::size_t{1} << (2 * dim);
  for (std::size_t code = 0; code < total; ++code) {
    for (unsigned i = 0; i < dim; ++i) x[dim - 1 - i] = (((code >> (2 * i)) & 3u) + 1) % 4;
    const auto nonzero = std::count_if(x.begin(), x.end(), [](unsigned t) { return t != 0; });
    const bool has_two = std::find(x.begin(), x.end(), 2u) != x.end();
    if (has_two && nonzero >= 2) vectors.push_back(x);
  }
  return from_predicate(vectors.size(), [&](Vertex u, Vertex v) {
    unsigned differing = 0;
    bool opposite = false;
    for (unsigned i = 0; i < dim; ++i) {
      const unsigned d = (vectors[u][i] + 4 - vectors[v][i]) % 4;
      differing += d != 0;
      opposite |= d == 2;
    }
    return differing >= 2 && opposite;
  });
}

Graph mann_graph(unsigned dim) {
  if (dim < 1 || dim > 5) throw std::invalid_argument("mann_graph: dim must be in [1, 5]");
  std::size_t points = 1;
  for (unsigned i = 0; i < dim; ++i) points *= 3;
  auto third = [&](std::size_t a, std::size_t b) {
    // The line through a and b in Z3^dim is {a, b, -(a+b)}.
    std::size_t c = 0, place = 1;
    for (unsigned i = 0; i < dim; ++i, a /= 3, b /= 3, place *= 3) c += ((6 - a % 3 - b % 3) % 3) * place;
    return c;
  };
  std::vector<std::array<std::size_t, 3>> lines;
  for (std::size_t a = 0; a < points; ++a)
    for (std::size_t b = a + 1; b < points; ++b) {
      std::array<std::size_t, 3> line{a, b, third(a, b)};
      std::sort(line.begin(), line.end());
      if (line[0] == a && line[1] == b) lines.push_back(line);
    }
  std::sort(lines.begin(), lines.end());

  // Vertices: 3 per line in line order, then one per point.
  const std::size_t n = 3 * lines.size() + points;
  auto point_of = [&](Vertex v) { return v < 3 * lines.size() ? lines[v / 3][v % 3] : v - 3 * lines.size(); };
  auto line_of = [&](Vertex v) { return v < 3 * lines.size() ? static_cast<long>(v / 3) : -1L; };
  return from_predicate(n, [&](Vertex u, Vertex v) {
    const long lu = line_of(u), lv = line_of(v);
    if (lu >= 0 && lu == lv) return false;
    if ((lu < 0) != (lv < 0) && point_of(u) == point_of(v)) return false;
    return true;
  });
}

const std::vector<NamedInstance>& constructible_instances() {
  static const std::vector<NamedInstance> instances = {
      {"c-fat200-1", 200, 1534, 12},     {"c-fat200-2", 200, 3235, 24},
      {"c-fat200-5", 200, 8473, 58},     {"c-fat500-1", 500, 4459, 14},
      {"c-fat500-2", 500, 9139, 26},     {"c-fat500-5", 500, 23191, 64},
      {"hamming6-2", 64, 1824, 32},      {"hamming6-4", 64, 704, 4},
      {"hamming8-2", 256, 31616, 128},   {"hamming8-4", 256, 20864, 16},
      {"hamming10-2", 1024, 518656, 512}, {"johnson8-2-4", 28, 210, 4},
      {"johnson8-4-4", 70, 1855, 14},    {"johnson16-2-4", 120, 5460, 8},
      {"keller4", 171, 9435, 11},        {"MANN_a9", 45, 918, 16},
      {"MANN_a27", 378, 70551, 126},
  };
  return instances;
}

std::optional<Graph> construct_instance(std::string_view name) {
  if (name == "c-fat200-1") return c_fat_graph(200, 1);
  if (name == "c-fat200-2") return c_fat_graph(200, 2);
  if (name == "c-fat200-5") return c_fat_graph(200, 5);
  if (name == "c-fat500-1") return c_fat_graph(500, 1);
  if (name == "c-fat500-2") return c_fat_graph(500, 2);
  if (name == "c-fat500-5") return c_fat_graph(500, 5);
  if (name == "hamming6-2") return hamming_graph(6, 2);
  if (name == "hamming6-4") return hamming_graph(6, 4);
  if (name == "hamming8-2") return hamming_graph(8, 2);
  if (name == "hamming8-4") return hamming_graph(8, 4);
  if (name == "hamming10-2") return hamming_graph(10, 2);
  if (name == "johnson8-2-4") return johnson_graph(8, 2, 4);
  if (name == "johnson8-4-4") return johnson_graph(8, 4, 4);
  if (name == "johnson16-2-4") return johnson_graph(16, 2, 4);
  if (name == "keller4") return keller_graph(4);
  if (name == "MANN_a9") return mann_graph(2);
  if (name == "MANN_a27") return mann_graph(3);
  return std::nullopt;
}

}  // namespace mclique
