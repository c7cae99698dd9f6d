#include "netdiag/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace netdiag {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json j;
  j["vertex_count"] = g.vertex_count();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertex_count") || !j.contains("edges")) {
    throw std::invalid_argument("graph json: expected object with vertex_count and edges");
  }
  const int n = j.at("vertex_count").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("graph json: each edge must be a [u, v] pair");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return Graph(n, edges, std::move(labels));
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  json j;
  in >> j;
  return graph_from_json(j);
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << graph_to_json(g).dump(2) << "\n";
}

namespace {

json topology_json(const TopologySource& source) {
  json j;
  if (source.kind) {
    switch (source.kind->kind) {
      case TopologyKind::Kind::BalancedHypercube:
        j["kind"] = "balanced_hypercube";
        j["n"] = source.kind->param;
        break;
      case TopologyKind::Kind::G8:
        j["kind"] = "g8";
        break;
      case TopologyKind::Kind::Crown:
        j["kind"] = "crown";
        j["k"] = source.kind->param;
        break;
      case TopologyKind::Kind::Hypercube:
        j["kind"] = "hypercube";
        j["n"] = source.kind->param;
        break;
      case TopologyKind::Kind::Cycle:
        j["kind"] = "cycle";
        j["m"] = source.kind->param;
        break;
    }
  } else if (source.path) {
    j["kind"] = "file";
    j["path"] = *source.path;
  } else {
    j["kind"] = "graph";
  }
  return j;
}

json edge_set_json(const EdgeSet& fe) {
  json arr = json::array();
  for (const Edge& e : fe.edges()) arr.push_back(json::array({e.u, e.v}));
  return arr;
}

}  // namespace

json report_to_json(const DiagnosabilityReport& report) {
  json j;
  j["topology"] = topology_json(report.topology);
  j["model"] = model_name(report.model);
  j["h"] = report.h;
  j["value"] = report.value.has_value() ? json(*report.value) : json(nullptr);
  j["lower"] = report.lower;
  j["upper"] = report.upper;
  j["strategy"] = report.strategy;
  if (report.certificate) {
    json cert;
    cert["fe"] = edge_set_json(report.certificate->fe);
    cert["f1"] = report.certificate->pair.f1.ids();
    cert["f2"] = report.certificate->pair.f2.ids();
    j["certificate"] = std::move(cert);
  } else {
    j["certificate"] = nullptr;
  }
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

json verify_cells_to_json(const std::vector<VerifyCell>& cells) {
  json arr = json::array();
  for (const VerifyCell& c : cells) {
    json j;
    j["topology"] = c.topology;
    j["model"] = model_name(c.model);
    j["n"] = c.n;
    j["h"] = c.h;
    j["expected"] = c.expected;
    j["value"] = c.value.has_value() ? json(*c.value) : json(nullptr);
    j["lower"] = c.lower;
    j["upper"] = c.upper;
    j["strategy"] = c.strategy;
    j["verdict"] = c.verdict;
    j["elapsed_ms"] = c.elapsed_ms;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string verify_cells_to_csv(const std::vector<VerifyCell>& cells) {
  std::set<int> dims;
  std::set<std::string> models;
  int max_h = 0;
  for (const VerifyCell& c : cells) {
    dims.insert(c.n);
    models.insert(model_name(c.model));
    max_h = std::max(max_h, c.h);
  }
  std::map<std::tuple<int, std::string, int>, const VerifyCell*> by_key;
  for (const VerifyCell& c : cells) by_key[{c.n, model_name(c.model), c.h}] = &c;

  std::ostringstream out;
  out << "n";
  for (const std::string& m : models) {
    for (int h = 0; h <= max_h; ++h) out << "," << m << "_h" << h;
  }
  out << "\n";
  for (int n : dims) {
    out << n;
    for (const std::string& m : models) {
      for (int h = 0; h <= max_h; ++h) {
        out << ",";
        auto it = by_key.find({n, m, h});
        if (it == by_key.end()) continue;
        const VerifyCell& c = *it->second;
        if (c.value.has_value()) {
          out << *c.value;
        } else {
          out << "[" << c.lower << ".." << c.upper << "]";
        }
        out << "/" << c.verdict;
      }
    }
    out << "\n";
  }
  return out.str();
}

json simulation_to_json(const VertexSet& faults, const Syndrome& syndrome,
                        const std::vector<VertexSet>& consistent) {
  json j;
  j["model"] = model_name(syndrome.model);
  j["faults"] = faults.ids();
  json units = json::array();
  for (std::size_t i = 0; i < syndrome.units.size(); ++i) {
    const TestUnit& u = syndrome.units[i];
    json unit = u.right < 0 ? json::array({u.actor, u.left})
                            : json::array({u.actor, u.left, u.right});
    units.push_back(json::array({std::move(unit), static_cast<int>(syndrome.bits[i])}));
  }
  j["syndrome"] = std::move(units);
  json cons = json::array();
  for (const VertexSet& f : consistent) cons.push_back(f.ids());
  j["consistent"] = std::move(cons);
  return j;
}

}  // namespace netdiag
