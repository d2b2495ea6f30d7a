#include "mclique/community.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "mclique/heuristic.hpp"

namespace mclique {
namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

Vertex intern(std::unordered_map<std::string, Vertex>& ids, std::vector<std::string>* labels,
              const std::string& key) {
  auto [it, inserted] = ids.try_emplace(key, static_cast<Vertex>(ids.size()));
  if (inserted && labels) labels->push_back(key);
  return it->second;
}

}  // namespace

InteractionRecords parse_interaction_records(std::istream& in) {
  InteractionRecords r;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string wall, user;
    if (!(fields >> wall) || wall[0] == '#') continue;
    if (!(fields >> user)) throw FormatError("expected '<wall> <user>'", line_no);
    r.records.emplace_back(std::move(wall), std::move(user));
  }
  return r;
}

double WeightedGraph::weight(Vertex u, Vertex v) const {
  const auto nu = graph.neighbors(u);
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) return 0.0;
  return weights[graph.offsets()[u] + static_cast<std::size_t>(it - nu.begin())];
}

WeightedGraph build_cooccurrence_graph(const InteractionRecords& r) {
  if (r.records.empty()) throw std::invalid_argument("no interaction records");
  WeightedGraph wg;
  std::unordered_map<std::string, Vertex> wall_ids, user_ids;
  std::vector<std::pair<Vertex, Vertex>> incidences;  // (user, wall)
  incidences.reserve(r.records.size());
  for (const auto& [wall, user] : r.records) {
    const Vertex w = intern(wall_ids, &wg.labels, wall);
    const Vertex u = intern(user_ids, nullptr, user);
    incidences.emplace_back(u, w);
  }
  std::sort(incidences.begin(), incidences.end());
  incidences.erase(std::unique(incidences.begin(), incidences.end()), incidences.end());

  const std::size_t walls = wall_ids.size();
  std::vector<std::size_t> users_per_wall(walls, 0);
  for (auto [u, w] : incidences) ++users_per_wall[w];

  std::unordered_map<std::uint64_t, std::uint32_t> shared;
  for (std::size_t i = 0; i < incidences.size();) {
    std::size_t j = i;
    while (j < incidences.size() && incidences[j].first == incidences[i].first) ++j;
    for (std::size_t a = i; a < j; ++a)
      for (std::size_t b = a + 1; b < j; ++b)
        ++shared[pair_key(incidences[a].second, incidences[b].second)];
    i = j;
  }

  EdgeList raw;
  raw.n = walls;
  raw.edges.reserve(shared.size());
  for (const auto& [key, count] : shared)
    raw.edges.emplace_back(static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffu));
  wg.graph = normalize(raw);

  wg.weights.resize(wg.graph.adjacency().size());
  std::size_t slot = 0;
  for (Vertex u = 0; u < walls; ++u)
    for (Vertex v : wg.graph.neighbors(u)) {
      const double inter = shared.at(pair_key(u, v));
      wg.weights[slot++] = inter / static_cast<double>(users_per_wall[u] + users_per_wall[v] - inter);
    }
  return wg;
}

Graph threshold_filter(const WeightedGraph& wg, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw std::invalid_argument("threshold must be in [0, 1]");
  EdgeList raw;
  raw.n = wg.graph.num_vertices();
  std::size_t slot = 0;
  for (Vertex u = 0; u < raw.n; ++u)
    for (Vertex v : wg.graph.neighbors(u)) {
      if (u < v && wg.weights[slot] > threshold) raw.edges.emplace_back(u, v);
      ++slot;
    }
  return normalize(raw);
}

std::vector<std::vector<Vertex>> detect_communities(const Graph& g, unsigned threads) {
  auto cliques = largest_clique_per_vertex(g, threads);
  std::erase_if(cliques, [](const auto& c) { return c.size() < 2; });
  // Larger sets first so each candidate only needs checking against kept ones.
  std::sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());

  std::vector<std::vector<Vertex>> kept;
  std::vector<std::vector<std::size_t>> containing(g.num_vertices());
  for (auto& c : cliques) {
    const auto& holders = containing[c.front()];
    const bool subset = std::any_of(holders.begin(), holders.end(), [&](std::size_t i) {
      const auto& k = kept[i];
      return k.size() > c.size() && std::includes(k.begin(), k.end(), c.begin(), c.end());
    });
    if (subset) continue;
    for (Vertex v : c) containing[v].push_back(kept.size());
    kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace mclique
