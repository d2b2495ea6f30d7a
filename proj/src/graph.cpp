#include "mclique/graph.hpp"

#include <algorithm>
#include <limits>

namespace mclique {

FormatError::FormatError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nu = neighbors(u);
  check(v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph normalize(const EdgeList& raw) {
  if (raw.n > std::numeric_limits<Vertex>::max())
    throw FormatError("vertex count " + std::to_string(raw.n) + " exceeds 32-bit id space");

  const std::size_t n = raw.n;
  std::vector<std::size_t> counts(n + 1, 0);
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    auto [u, v] = raw.edges[i];
    if (u >= n || v >= n)
      throw FormatError("edge #" + std::to_string(i + 1) + " (" + std::to_string(u) + ", " +
                        std::to_string(v) + ") has id outside [0, " + std::to_string(n) + ")");
    if (u == v) continue;
    ++counts[u + 1];
    ++counts[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) counts[v + 1] += counts[v];

  std::vector<Vertex> scratch(counts[n]);
  std::vector<std::size_t> fill(counts.begin(), counts.end() - 1);
  for (auto [u, v] : raw.edges) {
    if (u == v) continue;
    scratch[fill[u]++] = v;
    scratch[fill[v]++] = u;
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.adjacency_.reserve(scratch.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto first = scratch.begin() + static_cast<std::ptrdiff_t>(counts[v]);
    auto last = scratch.begin() + static_cast<std::ptrdiff_t>(counts[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    g.adjacency_.insert(g.adjacency_.end(), first, last);
    g.offsets_[v + 1] = g.adjacency_.size();
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1] - g.offsets_[v]);
  }
  g.adjacency_.shrink_to_fit();
  return g;
}

Graph make_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  EdgeList raw;
  raw.n = n;
  raw.edges.assign(edges.begin(), edges.end());
  return normalize(raw);
}

Graph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return make_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(g.num_vertices(), std::numeric_limits<Vertex>::max());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.num_vertices()) throw std::out_of_range("induced_subgraph: vertex out of range");
    index[keep[i]] = static_cast<Vertex>(i);
  }
  EdgeList raw;
  raw.n = keep.size();
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : g.neighbors(keep[i]))
      if (index[w] != std::numeric_limits<Vertex>::max() && i < index[w])
        raw.edges.emplace_back(static_cast<Vertex>(i), index[w]);
  return normalize(raw);
}

}  // namespace mclique
