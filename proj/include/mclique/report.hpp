#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mclique/graph.hpp"
#include "mclique/heuristic.hpp"
#include "mclique/result.hpp"

namespace mclique {

/// {"algorithm", "size", "witness", "p1".."p5", "nodes", "elapsed", "exact",
///  "lb_unverified"} plus "policy" and "seed" for heuristic runs.
nlohmann::json result_to_json(const CliqueResult& r, std::string_view algorithm,
                              const std::optional<SelectionPolicy>& policy = std::nullopt);

/// {"n", "m", "max_degree", "degree_histogram": [{"degree", "count"}, ...]}
nlohmann::json stats_to_json(const Graph& g);

/// {"walls": [...], "communities": [[v, ...], ...]}
nlohmann::json communities_to_json(const std::vector<std::string>& labels,
                                   const std::vector<std::vector<Vertex>>& communities);

std::string_view policy_name(const SelectionPolicy& p);

}  // namespace mclique
