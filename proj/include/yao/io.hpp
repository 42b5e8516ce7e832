#pragma once

// Serialization: point sets as JSON {"k","rotation","points":[[x,y],...]} or
// CSV with a "# k=... rotation=..." header; graphs as JSON
// {"n","k","edges":[[u,v,sector],...],"order":[...]} plus DOT and SVG export.

#include <string>

#include <json.hpp>

#include "yao/graph.hpp"
#include "yao/orderings.hpp"

namespace yao {

nlohmann::json point_set_to_json(const PointSet& ps);
PointSet point_set_from_json(const nlohmann::json& j);

std::string point_set_to_csv(const PointSet& ps);
PointSet point_set_from_csv(const std::string& text);

nlohmann::json graph_to_json(const OrderedYaoGraph& g);
OrderedYaoGraph graph_from_json(const nlohmann::json& j);

// Directed DOT with the sector index as edge label; node positions included
// so neato renders the embedding.
std::string graph_to_dot(const OrderedYaoGraph& g, const PointSet* ps = nullptr);

// Presentation-only rendering of the embedded point set / graph.
std::string render_svg(const PointSet& ps, const OrderedYaoGraph* g = nullptr);

nlohmann::json stats_to_json(const GraphStats& s);
nlohmann::json report_to_json(const GeneralPositionReport& r);
nlohmann::json outcome_to_json(const StrategyOutcome& o);

// Reads/writes a point set choosing the format by extension (.json / .csv).
PointSet load_point_set(const std::string& path);
void save_point_set(const PointSet& ps, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace yao
