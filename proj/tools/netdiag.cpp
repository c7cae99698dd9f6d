// Command-line front end: graph generation, structural analysis,
// diagnosability computation, closed-form verification, and syndrome
// simulation, all emitting machine-readable JSON.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netdiag/diagnose.hpp"
#include "netdiag/io.hpp"
#include "netdiag/parallel.hpp"
#include "netdiag/syndrome.hpp"
#include "netdiag/topology.hpp"

using nlohmann::json;
using namespace netdiag;

namespace {

struct GraphChoice {
  std::string topology;
  int n = 1;
  int k = 2;
  int m = 3;
  std::string file;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--topology", topology, "bh|g8|crown|hypercube|cycle")
        ->check(CLI::IsMember({"bh", "g8", "crown", "hypercube", "cycle"}));
    cmd->add_option("--n", n, "dimension for bh/hypercube");
    cmd->add_option("--k", k, "degree parameter for crown");
    cmd->add_option("--m", m, "length for cycle");
    cmd->add_option("--graph", file, "path to a graph JSON file");
  }

  TopologySource source() const {
    TopologySource src;
    if (!file.empty()) {
      src.path = file;
    } else {
      src.kind = kind();
    }
    return src;
  }

  TopologyKind kind() const {
    if (topology == "bh") return TopologyKind::balanced_hypercube(n);
    if (topology == "g8") return TopologyKind::g8();
    if (topology == "crown") return TopologyKind::crown(k);
    if (topology == "hypercube") return TopologyKind::hypercube(n);
    if (topology == "cycle") return TopologyKind::cycle(m);
    throw CLI::ValidationError("--topology or --graph is required");
  }

  Graph build() const {
    if (!file.empty()) return load_graph(file);
    return build_topology(kind());
  }
};

std::vector<DiagModel> parse_models(const std::string& model) {
  if (model == "pmc") return {DiagModel::Pmc};
  if (model == "mm-star") return {DiagModel::MmStar};
  if (model == "both") return {DiagModel::Pmc, DiagModel::MmStar};
  throw CLI::ValidationError("--model must be pmc, mm-star, or both");
}

std::pair<int, int> parse_h_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int h = std::stoi(text);
      return {h, h};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw CLI::ValidationError("--h range is empty");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--h expects an integer or A..B");
  }
}

Strategy parse_strategy(const std::string& name, std::uint64_t trials, std::uint64_t seed) {
  if (name == "exhaustive") return Strategy::exhaustive();
  if (name == "witness") return Strategy::witness_only();
  if (name == "sampled") return Strategy::sampled(trials, seed);
  throw CLI::ValidationError("--strategy must be exhaustive, witness, or sampled");
}

void write_output(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write output file: " + out_path);
  out << j.dump(2) << "\n";
}

int run_gen(const GraphChoice& choice, const std::string& out_path) {
  write_output(graph_to_json(choice.build()), out_path);
  return 0;
}

int run_props(const GraphChoice& choice, const std::string& out_path) {
  Graph g = choice.build();
  StructuralProfile p = structural_profile(g);
  json j;
  j["topology"] = choice.source().label();
  j["vertex_count"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  j["connected"] = p.connected;
  j["bipartite"] = p.bipartite;
  j["triangle_free"] = p.triangle_free;
  j["regular_degree"] = p.regular_degree ? json(*p.regular_degree) : json(nullptr);
  j["min_degree"] = p.min_degree;
  j["max_degree"] = p.max_degree;
  j["vertex_connectivity"] = vertex_connectivity(g);
  if (g.vertex_count() >= 2) {
    CommonNeighborStats stats = common_neighbor_stats(g);
    j["max_common_neighbors"] = stats.max_common;
    json hist = json::object();
    for (const auto& [count, pairs] : stats.histogram) hist[std::to_string(count)] = pairs;
    j["common_neighbor_histogram"] = std::move(hist);
  }
  write_output(j, out_path);
  return 0;
}

int run_reports(const GraphChoice& choice, const std::string& model, int h_lo, int h_hi,
                const Strategy& strategy, int workers, const std::string& out_path) {
  Graph g = choice.build();
  json arr = json::array();
  for (DiagModel m : parse_models(model)) {
    for (int h = h_lo; h <= h_hi; ++h) {
      DiagnosabilityReport rep = edge_tolerable_diagnosability(g, h, m, strategy, workers);
      rep.topology = choice.source();
      arr.push_back(report_to_json(rep));
      std::string value = rep.value ? std::to_string(*rep.value)
                                    : "[" + std::to_string(rep.lower) + ".." +
                                          std::to_string(rep.upper) + "]";
      std::cerr << model_flag_name(m) << " h=" << h << " value=" << value << "\n";
    }
  }
  write_output(arr.size() == 1 ? arr[0] : arr, out_path);
  return 0;
}

int finish_verify(const std::vector<VerifyCell>& cells, const std::string& out_path,
                  const std::string& csv_path) {
  int failures = 0;
  for (const VerifyCell& c : cells) {
    std::string computed = c.value ? std::to_string(*c.value)
                                   : "[" + std::to_string(c.lower) + ".." +
                                         std::to_string(c.upper) + "]";
    std::cout << c.topology << " " << model_flag_name(c.model) << " h=" << c.h
              << " expected=" << c.expected << " computed=" << computed << " " << c.verdict
              << "\n";
    if (c.verdict == "FAIL") ++failures;
  }
  std::cout << (cells.size() - static_cast<std::size_t>(failures)) << "/" << cells.size()
            << " cells ok\n";
  if (!out_path.empty()) write_output(verify_cells_to_json(cells), out_path);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write csv file: " + csv_path);
    csv << verify_cells_to_csv(cells);
  }
  return failures == 0 ? 0 : 2;
}

int run_simulate(const GraphChoice& choice, const std::string& model,
                 const std::vector<int>& faults, const std::string& policy, std::uint64_t seed,
                 int t, const std::string& out_path) {
  Graph g = choice.build();
  std::vector<DiagModel> models = parse_models(model);
  if (models.size() != 1) throw CLI::ValidationError("simulate needs a single --model");

  FaultInjection inj;
  inj.faults = VertexSet(g.vertex_count());
  for (int v : faults) {
    if (v < 0 || v >= g.vertex_count()) throw CLI::ValidationError("--faults id out of range");
    inj.faults.set(v);
  }
  if (policy == "zeros") {
    inj.policy = AdversaryPolicy::AllZeros;
  } else if (policy == "ones") {
    inj.policy = AdversaryPolicy::AllOnes;
  } else if (policy == "random") {
    inj.policy = AdversaryPolicy::RandomSeeded;
  } else {
    throw CLI::ValidationError("--policy must be zeros, ones, or random");
  }
  inj.seed = seed;

  if (t < 0) t = inj.faults.count();
  Syndrome s = generate_syndrome(g, inj, models[0]);
  auto consistent = consistent_fault_sets(g, s, t);
  write_output(simulation_to_json(inj.faults, s, consistent), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced-hypercube fault-diagnosis toolkit"};
  app.set_help_flag("--help", "print help");  // keep -h free for the --h range flag
  app.require_subcommand(1);

  GraphChoice choice;
  std::string model = "both";
  std::string h_range = "0";
  std::string strategy_name = "exhaustive";
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  int workers = 0;
  std::string out_path;
  std::string csv_path;
  int max_n = 2;
  std::vector<int> faults;
  std::string policy = "zeros";
  int t_bound = -1;
  std::string verify_target = "table1";

  auto add_common = [&](CLI::App* cmd, bool with_graph) {
    cmd->set_help_flag("--help", "print help");
    if (with_graph) choice.add_options(cmd);
    cmd->add_option("--out", out_path, "write JSON here instead of stdout");
    cmd->add_option("--workers", workers,
                    "engine parallelism; 0 means NETDIAG_WORKERS or all cores");
  };

  CLI::App* gen = app.add_subcommand("gen", "emit a topology as graph JSON");
  add_common(gen, true);

  CLI::App* props = app.add_subcommand("props", "structural profile of a graph");
  add_common(props, true);

  CLI::App* diag = app.add_subcommand("diag", "diagnosability at h = 0");
  add_common(diag, true);
  diag->add_option("--model", model, "pmc|mm-star|both");
  diag->add_option("--strategy", strategy_name, "exhaustive|witness|sampled");
  diag->add_option("--trials", trials, "samples for the sampled strategy");
  diag->add_option("--seed", seed, "seed for the sampled strategy");

  CLI::App* sweep = app.add_subcommand("sweep", "edge-tolerable diagnosability over an h range");
  add_common(sweep, true);
  sweep->add_option("--model", model, "pmc|mm-star|both");
  sweep->add_option("--h", h_range, "single h or range A..B");
  sweep->add_option("--strategy", strategy_name, "exhaustive|witness|sampled");
  sweep->add_option("--trials", trials, "samples for the sampled strategy");
  sweep->add_option("--seed", seed, "seed for the sampled strategy");

  CLI::App* verify = app.add_subcommand("verify", "check computed values against the closed form");
  add_common(verify, false);
  verify->add_option("target", verify_target, "table1|instances")
      ->check(CLI::IsMember({"table1", "instances"}));
  verify->add_option("--max-n", max_n, "largest balanced-hypercube dimension");
  verify->add_option("--trials", trials, "samples per cell beyond the exhaustive range");
  verify->add_option("--seed", seed, "seed for sampled cells");
  verify->add_option("--csv", csv_path, "also write the verdict table as CSV");

  CLI::App* simulate = app.add_subcommand("simulate", "inject faults and decode the syndrome");
  add_common(simulate, true);
  simulate->add_option("--model", model, "pmc|mm-star");
  simulate->add_option("--faults", faults, "comma-separated faulty vertex ids")->delimiter(',');
  simulate->add_option("--policy", policy, "zeros|ones|random");
  simulate->add_option("--seed", seed, "adversary seed for the random policy");
  simulate->add_option("--t", t_bound, "decode bound; defaults to the injected fault count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const int w = resolve_workers(workers);
    if (gen->parsed()) return run_gen(choice, out_path);
    if (props->parsed()) return run_props(choice, out_path);
    if (diag->parsed()) {
      return run_reports(choice, model, 0, 0, parse_strategy(strategy_name, trials, seed), w,
                         out_path);
    }
    if (sweep->parsed()) {
      auto [lo, hi] = parse_h_range(h_range);
      return run_reports(choice, model, lo, hi, parse_strategy(strategy_name, trials, seed), w,
                         out_path);
    }
    if (verify->parsed()) {
      if (verify_target == "instances") {
        return finish_verify(verify_reference_instances(w), out_path, csv_path);
      }
      VerifyOptions opts;
      opts.max_n = max_n;
      opts.trials = trials;
      opts.seed = seed;
      opts.workers = w;
      return finish_verify(verify_bh_values(opts), out_path, csv_path);
    }
    if (simulate->parsed()) {
      return run_simulate(choice, model, faults, policy, seed, t_bound, out_path);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
