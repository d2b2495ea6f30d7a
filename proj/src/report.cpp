#include "mclique/report.hpp"

#include <map>

namespace mclique {

std::string_view policy_name(const SelectionPolicy& p) {
  return p.kind == SelectionPolicy::Kind::MaxDegree ? "maxdeg" : "random";
}

nlohmann::json result_to_json(const CliqueResult& r, std::string_view algorithm,
                              const std::optional<SelectionPolicy>& policy) {
  nlohmann::json j;
  j["algorithm"] = algorithm;
  j["size"] = r.size;
  j["witness"] = r.witness;
  j["p1"] = r.stats.p1;
  j["p2"] = r.stats.p2;
  j["p3"] = r.stats.p3;
  j["p4"] = r.stats.p4;
  j["p5"] = r.stats.p5;
  j["nodes"] = r.nodes;
  j["elapsed"] = r.elapsed;
  j["exact"] = r.exact;
  j["lb_unverified"] = r.lb_unverified;
  if (policy) {
    j["policy"] = policy_name(*policy);
    j["seed"] = policy->seed;
  }
  return j;
}

nlohmann::json stats_to_json(const Graph& g) {
  std::map<std::size_t, std::size_t> histogram;
  for (Vertex v = 0; v < g.num_vertices(); ++v) ++histogram[g.degree(v)];
  nlohmann::json hist = nlohmann::json::array();
  for (auto [degree, count] : histogram) hist.push_back({{"degree", degree}, {"count", count}});
  return {{"n", g.num_vertices()},
          {"m", g.num_edges()},
          {"max_degree", g.max_degree()},
          {"degree_histogram", hist}};
}

nlohmann::json communities_to_json(const std::vector<std::string>& labels,
                                   const std::vector<std::vector<Vertex>>& communities) {
  return {{"walls", labels}, {"communities", communities}};
}

}  // namespace mclique
