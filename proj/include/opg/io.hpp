#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "opg/bfs.hpp"
#include "opg/bigint.hpp"
#include "opg/folner.hpp"
#include "opg/graph.hpp"

namespace opg {

// Wire format for a graph spec. Periods, offsets and lengths travel as
// decimal strings: prime-family constants do not fit in 64-bit JSON numbers.
//
//   {"name": "...", "layers": [{"label": "E_0", "period": "1",
//     "templates": [{"offset": "0", "length": "1"}]}]}

inline nlohmann::json spec_to_json(const graph_spec<bigint>& g) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& layer : g.layers()) {
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : layer.templates())
      ts.push_back({{"offset", to_decimal(t.offset)},
                    {"length", to_decimal(t.length)}});
    layers.push_back({{"label", layer.label()},
                      {"period", to_decimal(layer.period())},
                      {"templates", std::move(ts)}});
  }
  return {{"name", g.name()}, {"layers", std::move(layers)}};
}

inline graph_spec<bigint> spec_from_json(const nlohmann::json& j) {
  std::vector<layer_spec<bigint>> layers;
  for (const auto& jl : j.at("layers")) {
    std::vector<edge_template<bigint>> ts;
    for (const auto& jt : jl.at("templates"))
      ts.push_back({parse_decimal(jt.at("offset").get<std::string>()),
                    parse_decimal(jt.at("length").get<std::string>())});
    layers.emplace_back(parse_decimal(jl.at("period").get<std::string>()),
                        std::move(ts), jl.at("label").get<std::string>());
  }
  return graph_spec<bigint>(std::move(layers), j.at("name").get<std::string>());
}

// Growth curve CSV: header "j,volume", one row per radius, exact integers.
inline std::string curve_to_csv(const growth_curve& curve) {
  std::string out = "j,volume\n";
  for (std::size_t j = 0; j < curve.volumes.size(); ++j)
    out += std::to_string(j) + "," + std::to_string(curve.volumes[j]) + "\n";
  return out;
}

// Boundary-ratio CSV: header "n,interval,boundary,ratio_num,ratio_den".
inline std::string folner_to_csv(const std::vector<folner_row>& rows) {
  std::string out = "n,interval,boundary,ratio_num,ratio_den\n";
  for (const auto& r : rows)
    out += std::to_string(r.half_width) + "," + std::to_string(r.interval_size) +
           "," + std::to_string(r.boundary_count) + "," +
           std::to_string(r.ratio_num) + "," + std::to_string(r.ratio_den) +
           "\n";
  return out;
}

// Edge list CSV: header "u,v", decimal vertex labels.
template <class I>
inline std::string edges_to_csv(const std::vector<std::pair<I, I>>& edges) {
  std::string out = "u,v\n";
  for (const auto& [u, v] : edges)
    out += to_decimal(u) + "," + to_decimal(v) + "\n";
  return out;
}

template <class I>
inline std::string edges_to_dot(const std::vector<std::pair<I, I>>& edges,
                                const std::string& name) {
  std::string out = "graph \"" + name + "\" {\n";
  for (const auto& [u, v] : edges)
    out += "  \"" + to_decimal(u) + "\" -- \"" + to_decimal(v) + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace opg
