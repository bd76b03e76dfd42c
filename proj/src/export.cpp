#include "frucht/export.hpp"

#include <sstream>

namespace frucht {

std::string to_edge_list(const FiniteGraph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.graph.edges())
    out << vertex_str(g.vertices[u]) << ' ' << vertex_str(g.vertices[v])
        << '\n';
  return out.str();
}

std::string to_dot(const FiniteGraph& g) {
  std::ostringstream out;
  out << "graph main {\n";
  for (const Vertex& v : g.vertices)
    out << "  \"" << vertex_str(v) << "\";\n";
  for (const auto& [u, v] : g.graph.edges())
    out << "  \"" << vertex_str(g.vertices[u]) << "\" -- \""
        << vertex_str(g.vertices[v]) << "\";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json manifest(const FiniteGraph& g) {
  return nlohmann::json{{"group", g.group.name()},
                        {"order", g.group.order()},
                        {"code_length", g.code_len},
                        {"k_max", g.k_max},
                        {"vertex_count", g.graph.num_vertices()},
                        {"edge_count", g.graph.num_edges()}};
}

nlohmann::json to_json(const FiniteGraph& g) {
  nlohmann::json out = manifest(g);
  nlohmann::json vertices = nlohmann::json::array();
  for (const Vertex& v : g.vertices) vertices.push_back(vertex_str(v));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.graph.edges())
    edges.push_back(nlohmann::json::array(
        {vertex_str(g.vertices[u]), vertex_str(g.vertices[v])}));
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  return out;
}

std::string to_edge_list(const GadgetGraph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.graph.edges())
    out << g.label_of(u) << ' ' << g.label_of(v) << '\n';
  return out.str();
}

std::string to_dot(const GadgetGraph& g) {
  std::ostringstream out;
  out << "graph gadget {\n";
  for (int i = 0; i < g.graph.num_vertices(); ++i)
    out << "  " << g.label_of(i) << ";\n";
  for (const auto& [u, v] : g.graph.edges())
    out << "  " << g.label_of(u) << " -- " << g.label_of(v) << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const GadgetGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.graph.edges())
    edges.push_back(nlohmann::json::array({g.label_of(u), g.label_of(v)}));
  return nlohmann::json{{"code", g.code.str()},
                        {"first_vertex", GadgetGraph::first_vertex},
                        {"max_label", g.max_label()},
                        {"vertex_count", g.graph.num_vertices()},
                        {"edge_count", g.graph.num_edges()},
                        {"edges", std::move(edges)}};
}

nlohmann::json to_json(const RealizationReport& report) {
  return nlohmann::json{{"group", report.group_name},
                        {"order", report.order},
                        {"vertex_count", report.vertex_count},
                        {"edge_count", report.edge_count},
                        {"aut_count", report.aut_count},
                        {"search_nodes", report.search_nodes},
                        {"is_isomorphic", report.is_isomorphic},
                        {"homomorphism_ok", report.homomorphism_ok},
                        {"decode_ok", report.decode_ok},
                        {"ok", report.ok()},
                        {"first_failure", report.first_failure},
                        {"elapsed_ms", report.elapsed_ms}};
}

}  // namespace frucht
