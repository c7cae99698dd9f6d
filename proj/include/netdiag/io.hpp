#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "netdiag/diagnose.hpp"
#include "netdiag/graph.hpp"
#include "netdiag/syndrome.hpp"

namespace netdiag {

/// Canonical on-disk form: {"vertex_count": N, "edges": [[u,v],...],
/// "labels": [...]}. Writers emit u < v; readers accept either
/// orientation.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

nlohmann::json report_to_json(const DiagnosabilityReport& report);
nlohmann::json verify_cells_to_json(const std::vector<VerifyCell>& cells);

/// Wide table: one row per dimension, one column per (model, h).
std::string verify_cells_to_csv(const std::vector<VerifyCell>& cells);

nlohmann::json simulation_to_json(const VertexSet& faults, const Syndrome& syndrome,
                                  const std::vector<VertexSet>& consistent);

}  // namespace netdiag
