#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mclique/graph.hpp"

namespace mclique {

/// (wall, user) pairs: `user` interacted with `wall`. Ids are opaque strings.
struct InteractionRecords {
  std::vector<std::pair<std::string, std::string>> records;
};

/// Two whitespace-separated columns per line, wall then user; `#` starts a
/// comment line.
InteractionRecords parse_interaction_records(std::istream& in);

/// Walls as vertices, an edge wherever two walls share a user, weighted by
/// the Jaccard index of their user sets.
struct WeightedGraph {
  Graph graph;
  /// Parallel to graph.adjacency().
  std::vector<double> weights;
  /// Wall id of each vertex, in order of first appearance in the records.
  std::vector<std::string> labels;

  /// Weight of edge {u, v}, or 0 when absent.
  double weight(Vertex u, Vertex v) const;
};

WeightedGraph build_cooccurrence_graph(const InteractionRecords& r);

/// Keeps edges whose weight is strictly greater than `threshold` in [0, 1].
Graph threshold_filter(const WeightedGraph& wg, double threshold);

/// Overlapping communities: the per-vertex heuristic clique of every vertex,
/// deduplicated, with singletons and proper subsets of other communities
/// dropped. Each community is sorted; the list is in lexicographic order.
std::vector<std::vector<Vertex>> detect_communities(const Graph& g, unsigned threads = 1);

}  // namespace mclique
