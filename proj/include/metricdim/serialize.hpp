#pragma once

#include <string>

#include <json.hpp>

#include "metricdim/constructions.hpp"
#include "metricdim/families.hpp"
#include "metricdim/gaps.hpp"
#include "metricdim/resolve.hpp"

namespace metricdim {

/// Graph as the JSON edge-list schema:
///   {"n": <vertex count>, "parts": [[ids], [ids]]?, "edges": [[u, v], ...]}
inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.num_vertices();
  if (g.has_parts()) {
    j["parts"] = nlohmann::json::array(
        {g.side_vertices(Side::one), g.side_vertices(Side::two)});
  }
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back(nlohmann::json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    fail(errc::bad_format, "graph JSON needs 'n' and 'edges'");
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) fail(errc::bad_format, "edge entries must be [u, v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::optional<std::pair<std::vector<int>, std::vector<int>>> parts;
  if (j.contains("parts") && !j.at("parts").is_null()) {
    const auto& p = j.at("parts");
    if (!p.is_array() || p.size() != 2) fail(errc::bad_format, "'parts' must hold two id lists");
    parts.emplace(p[0].get<std::vector<int>>(), p[1].get<std::vector<int>>());
  }
  return build_graph(n, edges, parts);
}

inline nlohmann::json to_json(const ResolvingReport& r) {
  nlohmann::json j;
  j["resolving"] = r.resolving;
  j["landmarks"] = r.landmarks;
  if (r.witness)
    j["witness"] = nlohmann::json::array({r.witness->first, r.witness->second});
  else
    j["witness"] = nullptr;
  return j;
}

inline nlohmann::json to_json(const GapAudit& a) {
  nlohmann::json j;
  j["facts"] = {
      {"gap_at_most_four", a.gap_at_most_four},
      {"at_most_one_four_gap", a.at_most_one_four_gap},
      {"large_gap_neighbors_small", a.large_gap_neighbors_small},
      {"three_gaps_opposite_sides", a.three_gaps_opposite_sides},
      {"no_three_gap_with_four_gap", a.no_three_gap_with_four_gap},
  };
  if (a.cond_at_most_one_four_gap) {
    j["conditions"] = {
        {"at_most_one_four_gap", *a.cond_at_most_one_four_gap},
        {"three_gaps_opposite_sides", *a.cond_three_gaps_opposite_sides},
        {"no_three_gap_with_four_gap", *a.cond_no_three_gap_with_four_gap},
    };
  }
  j["gap_histogram"] = {
      {"0", a.size_histogram[0]}, {"1", a.size_histogram[1]}, {"2", a.size_histogram[2]},
      {"3", a.size_histogram[3]}, {"4", a.size_histogram[4]}, {"5+", a.size_histogram[5]},
  };
  j["violations"] = a.violations;
  return j;
}

inline nlohmann::json to_json(const DimensionFormulaResult& r) {
  nlohmann::json j;
  j["beta"] = r.beta;
  j["case"] = r.case_tag;
  j["component_betas"] = r.component_betas;
  j["k1"] = r.k1;
  j["k2"] = r.k2;
  j["k3"] = r.k3;
  return j;
}

}  // namespace metricdim
