#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef NETDIAG_CLI_PATH
#define NETDIAG_CLI_PATH "netdiag"
#endif

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
  const std::string out_file = "cli_test_stdout.tmp";
  std::string command = std::string(NETDIAG_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
  int rc = std::system(command.c_str());
  CliResult result;
  result.exit_code = WEXITSTATUS(rc);
  std::ifstream in(out_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.stdout_text = buffer.str();
  std::remove(out_file.c_str());
  return result;
}

json strip_timing(json j) {
  if (j.is_array()) {
    for (auto& item : j) item.erase("elapsed_ms");
  } else if (j.is_object()) {
    j.erase("elapsed_ms");
  }
  return j;
}

}  // namespace

TEST_CASE("gen emits labeled graph json") {
  CliResult r = run_cli("gen --topology bh --n 1");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  CHECK(j["vertex_count"] == 4);
  CHECK(j["edges"].size() == 4);
  CHECK(j["labels"][3] == "(3)");
}

TEST_CASE("props reports the structural profile") {
  CliResult r = run_cli("props --topology bh --n 2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  CHECK(j["vertex_count"] == 16);
  CHECK(j["regular_degree"] == 4);
  CHECK(j["bipartite"] == true);
  CHECK(j["vertex_connectivity"] == 4);
  CHECK(j["max_common_neighbors"] == 4);
}

TEST_CASE("diag on g8 under mm-star reports 2") {
  CliResult r = run_cli("diag --topology g8 --model mm-star");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  CHECK(j["value"] == 2);
  CHECK(j["model"] == "mm_star");
  CHECK(j["topology"]["kind"] == "g8");
}

TEST_CASE("sweep over BH_1 produces the closed-form values") {
  CliResult r = run_cli("sweep --topology bh --n 1 --model pmc --h 0..2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["value"] == 1);
  CHECK(j[1]["value"] == 1);
  CHECK(j[2]["value"] == 0);
}

TEST_CASE("verify exits zero with all cells passing") {
  CliResult r = run_cli("verify table1 --max-n 1");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("6/6 cells ok") != std::string::npos);
}

TEST_CASE("graph files round trip through gen and props") {
  CliResult gen = run_cli("gen --topology crown --k 3 --out cli_test_graph.json");
  REQUIRE(gen.exit_code == 0);
  CliResult props = run_cli("props --graph cli_test_graph.json");
  REQUIRE(props.exit_code == 0);
  json j = json::parse(props.stdout_text);
  CHECK(j["vertex_count"] == 8);
  CHECK(j["regular_degree"] == 3);
  std::remove("cli_test_graph.json");
}

TEST_CASE("simulate decodes an injected fault uniquely") {
  CliResult r = run_cli("simulate --topology bh --n 2 --model pmc --faults 3 --policy ones --t 4");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  CHECK(j["faults"] == json::array({3}));
  REQUIRE(j["consistent"].size() == 1);
  CHECK(j["consistent"][0] == json::array({3}));
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("sweep --topology bh --n 1 --model pmc --h 9").exit_code == 1);   // h > |E|
  CHECK(run_cli("diag --topology nosuch").exit_code == 1);
  CHECK(run_cli("diag --graph does_not_exist.json").exit_code == 1);
  CHECK(run_cli("simulate --topology bh --n 1 --model both --faults 0").exit_code == 1);
}

TEST_CASE("hopeless exhaustive runs are refused, not downgraded") {
  CliResult r = run_cli("diag --topology bh --n 3 --model mm-star --strategy exhaustive");
  CHECK(r.exit_code == 1);
}

TEST_CASE("same config and seed give byte-identical reports modulo timing") {
  const std::string args =
      "sweep --topology bh --n 2 --model both --h 0..2 --strategy sampled --trials 3000 --seed 11";
  CliResult a = run_cli(args + " --workers 1");
  CliResult b = run_cli(args + " --workers 3");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(strip_timing(json::parse(a.stdout_text)) == strip_timing(json::parse(b.stdout_text)));
}

TEST_CASE("witness strategy reports bounds through the CLI") {
  CliResult r = run_cli("sweep --topology bh --n 3 --model pmc --h 0..6 --strategy witness");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  REQUIRE(j.size() == 7);
  for (int h = 0; h <= 6; ++h) {
    CHECK(j[static_cast<std::size_t>(h)]["lower"] == 0);
    CHECK(j[static_cast<std::size_t>(h)]["upper"] == 6 - h);
    if (h < 6) CHECK(j[static_cast<std::size_t>(h)]["value"].is_null());
  }
}

TEST_CASE("verify covers the sampled dimension and stays green") {
  CliResult r = run_cli("verify table1 --max-n 3 --trials 2000 --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("30/30 cells ok") != std::string::npos);
  CHECK(r.stdout_text.find("CONSISTENT") != std::string::npos);
}

TEST_CASE("verify instances passes the reference-graph cells") {
  CliResult r = run_cli("verify instances");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("12/12 cells ok") != std::string::npos);
}
