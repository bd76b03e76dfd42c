#pragma once

#include <string>

#include <json.hpp>

#include "frucht/aut.hpp"
#include "frucht/gadget.hpp"
#include "frucht/main_graph.hpp"

namespace frucht {

// Main graph, one edge per line: "x1,y1,k1 x2,y2,k2", endpoints and lines
// sorted by vertex index.
std::string to_edge_list(const FiniteGraph& g);
std::string to_dot(const FiniteGraph& g);

nlohmann::json manifest(const FiniteGraph& g);
nlohmann::json to_json(const FiniteGraph& g);

// Gadget exports use the integer labels (anchor at 2).
std::string to_edge_list(const GadgetGraph& g);
std::string to_dot(const GadgetGraph& g);
nlohmann::json to_json(const GadgetGraph& g);

nlohmann::json to_json(const RealizationReport& report);

}  // namespace frucht
