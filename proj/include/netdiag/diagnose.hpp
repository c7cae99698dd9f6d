#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netdiag/distinguish.hpp"
#include "netdiag/graph.hpp"
#include "netdiag/topology.hpp"

namespace netdiag {

struct Strategy {
  enum class Kind { Exhaustive, WitnessOnly, Sampled };

  Kind kind = Kind::Exhaustive;
  std::uint64_t trials = 0;  // Sampled only
  std::uint64_t seed = 0;    // Sampled only

  static Strategy exhaustive() { return {Kind::Exhaustive, 0, 0}; }
  static Strategy witness_only() { return {Kind::WitnessOnly, 0, 0}; }
  static Strategy sampled(std::uint64_t trials, std::uint64_t seed) {
    return {Kind::Sampled, trials, seed};
  }

  std::string name() const;
};

/// The minimizing edge-fault set together with a fault pair that is
/// indistinguishable in G - fe.
struct Certificate {
  EdgeSet fe;
  FaultPair pair;
};

/// Where a report's graph came from; informational only.
struct TopologySource {
  std::optional<TopologyKind> kind;
  std::optional<std::string> path;

  std::string label() const;
};

struct DiagnosabilityReport {
  TopologySource topology;
  DiagModel model = DiagModel::Pmc;
  int h = 0;
  /// Exact value when known (always for Exhaustive; for bounds-only
  /// strategies only when the bounds pinch to a single value).
  std::optional<int> value;
  int lower = 0;
  int upper = 0;
  std::string strategy;
  std::optional<Certificate> certificate;
  double elapsed_ms = 0.0;
};

struct TDiagnosable {
  bool ok = false;
  /// Lexicographically least indistinguishable pair when !ok.
  std::optional<FaultPair> counterexample;
};

/// Whether every distinct pair of fault sets of size <= t is
/// distinguishable under the model. Pairs are enumerated without
/// duplication in lexicographic order with early exit, so a false result
/// carries the least counterexample. Requires at most 64 vertices.
TDiagnosable is_t_diagnosable(const Graph& g, int t, DiagModel model);

/// Largest t for which the graph is t-diagnosable; computed by the
/// pair-enumeration route (upward search over t). Always >= 0.
int diagnosability(const Graph& g, DiagModel model);

/// PMC diagnosability via the symmetric-difference core formula:
///   min over nonempty S of ceil(|S|/2) + |N(S)| - 1.
/// An indistinguishable pair with core S = F1 △ F2 minimizes
/// max(|F1|,|F2|) by taking F1 ∩ F2 = N(S) and splitting S evenly, so this
/// minimum equals the pair-enumeration value. Scans all 2^n - 1 subsets;
/// limited to 20 vertices.
int pmc_diagnosability_by_core(const Graph& g);

/// min over all Fe ⊆ E with |Fe| <= h of diagnosability(G - Fe). The
/// exhaustive strategy enumerates every cardinality 0..h and returns the
/// exact value with a certificate; WitnessOnly and Sampled return bounds.
/// Results and certificates do not depend on the worker count.
DiagnosabilityReport edge_tolerable_diagnosability(const Graph& g, int h, DiagModel model,
                                                   const Strategy& strategy, int workers = 1);

/// Standard upper-bound construction for a k-regular graph: cut h edges at
/// the lowest-id vertex u and compare F1 = N(u) in the damaged graph with
/// F2 = F1 ∪ {u}. The pair is verified indistinguishable under the model
/// before returning; it certifies a diagnosability ceiling of k - h.
struct UpperBoundWitness {
  EdgeSet fe;
  FaultPair pair;
  int bound = 0;  // k - h
};
UpperBoundWitness upper_bound_witness(const Graph& g, int h, DiagModel model);

/// One cell of a verification table: computed value (or bounds) vs the
/// expected closed-form value.
struct VerifyCell {
  std::string topology;
  DiagModel model = DiagModel::Pmc;
  int n = 0;
  int h = 0;
  int expected = 0;
  std::optional<int> value;
  int lower = 0;
  int upper = 0;
  std::string strategy;
  /// "PASS" on exact match, "CONSISTENT" when only bounds bracket the
  /// expected value, "FAIL" otherwise.
  std::string verdict;
  double elapsed_ms = 0.0;
};

/// Expected h-edge tolerable diagnosability of BH_n: under PMC, 1 for
/// n = 1 and h <= 1, 0 for n = 1 and h = 2, otherwise 2n - h; under MM*,
/// 0 for n = 1 and 2n - h for n >= 2.
int expected_bh_value(int n, int h, DiagModel model);

struct VerifyOptions {
  int max_n = 2;
  std::vector<DiagModel> models = {DiagModel::Pmc, DiagModel::MmStar};
  /// Dimensions above this use witness bounds plus sampled probing instead
  /// of exhaustive enumeration.
  int exhaustive_max_n = 2;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  int workers = 1;
};

/// Computes t_h^e(BH_n) for every n <= max_n, model, and 0 <= h <= 2n, and
/// compares with the closed form.
std::vector<VerifyCell> verify_bh_values(const VerifyOptions& opts);

/// Instance checks on the reference topologies: hypercube(3) under PMC and
/// g8 / crown(3) under MM* for h = 0..3.
std::vector<VerifyCell> verify_reference_instances(int workers = 1);

}  // namespace netdiag
