#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "netdiag/diagnose.hpp"
#include "netdiag/io.hpp"
#include "netdiag/topology.hpp"
#include "oracles.hpp"

using namespace netdiag;
using namespace netdiag::testing;
using nlohmann::json;

TEST_CASE("graph json round trip") {
  Graph bh2 = balanced_hypercube(2);
  json j = graph_to_json(bh2);
  CHECK(j["vertex_count"] == 16);
  CHECK(j["edges"].size() == 32);
  for (const auto& e : j["edges"]) CHECK(e[0].get<int>() < e[1].get<int>());
  Graph back = graph_from_json(j);
  CHECK(back.edges() == bh2.edges());
  CHECK(back.labels() == bh2.labels());
}

TEST_CASE("readers accept either edge orientation") {
  json j;
  j["vertex_count"] = 3;
  j["edges"] = json::array({json::array({2, 0}), json::array({1, 2})});
  Graph g = graph_from_json(j);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 1));
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
}

TEST_CASE("malformed graph json is rejected") {
  CHECK_THROWS(graph_from_json(json::parse(R"({"edges": []})")));
  CHECK_THROWS(graph_from_json(json::parse(R"({"vertex_count": 2, "edges": [[0]]})")));
  CHECK_THROWS(graph_from_json(json::parse(R"({"vertex_count": 2, "edges": [[0, 0]]})")));
  CHECK_THROWS(graph_from_json(json::parse(R"({"vertex_count": 2, "edges": [[0, 5]]})")));
  CHECK_THROWS(graph_from_json(json::parse(R"([1, 2, 3])")));
}

TEST_CASE("random graphs survive the file round trip") {
  for (int i = 0; i < 10; ++i) {
    Graph g = random_graph(4000 + i, 9, 0.4);
    std::string path = "roundtrip_test_graph.json";
    save_graph(g, path);
    Graph back = load_graph(path);
    CHECK(back.edges() == g.edges());
    CHECK(back.vertex_count() == g.vertex_count());
    std::remove(path.c_str());
  }
}

TEST_CASE("report json carries the full schema") {
  Graph bh1 = balanced_hypercube(1);
  DiagnosabilityReport rep =
      edge_tolerable_diagnosability(bh1, 1, DiagModel::Pmc, Strategy::exhaustive());
  rep.topology.kind = TopologyKind::balanced_hypercube(1);
  json j = report_to_json(rep);
  CHECK(j["topology"]["kind"] == "balanced_hypercube");
  CHECK(j["topology"]["n"] == 1);
  CHECK(j["model"] == "pmc");
  CHECK(j["h"] == 1);
  CHECK(j["value"] == 1);
  CHECK(j["lower"] == 1);
  CHECK(j["upper"] == 1);
  CHECK(j["strategy"] == "exhaustive");
  REQUIRE(j.contains("certificate"));
  CHECK(j["certificate"].contains("fe"));
  CHECK(j["certificate"].contains("f1"));
  CHECK(j["certificate"].contains("f2"));
  CHECK(j.contains("elapsed_ms"));

  DiagnosabilityReport sampled =
      edge_tolerable_diagnosability(balanced_hypercube(2), 1, DiagModel::MmStar,
                                    Strategy::sampled(200, 5));
  json js = report_to_json(sampled);
  CHECK(js["value"].is_null());
  CHECK(js["lower"] == 0);
}

TEST_CASE("verify cells serialize to json and csv") {
  VerifyOptions opts;
  opts.max_n = 1;
  std::vector<VerifyCell> cells = verify_bh_values(opts);
  json j = verify_cells_to_json(cells);
  CHECK(j.size() == 6);
  CHECK(j[0]["verdict"] == "PASS");

  std::string csv = verify_cells_to_csv(cells);
  CHECK(csv.find("n,") == 0);
  CHECK(csv.find("pmc_h0") != std::string::npos);
  CHECK(csv.find("1/PASS") != std::string::npos);
}

TEST_CASE("simulation json") {
  Graph c4 = cycle_graph(4);
  FaultInjection inj{VertexSet::of(4, {1}), AdversaryPolicy::AllZeros, 0};
  Syndrome s = generate_syndrome(c4, inj, DiagModel::MmStar);
  auto consistent = consistent_fault_sets(c4, s, 1);
  json j = simulation_to_json(inj.faults, s, consistent);
  CHECK(j["faults"] == json::array({1}));
  CHECK(j["syndrome"].size() == 4);
  CHECK(j["syndrome"][0][0].size() == 3);
  CHECK(j["consistent"].size() == consistent.size());
}
