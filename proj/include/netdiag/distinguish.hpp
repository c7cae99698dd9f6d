#pragma once

#include <optional>
#include <span>
#include <variant>

#include "netdiag/graph.hpp"

namespace netdiag {

enum class DiagModel { Pmc, MmStar };

/// Two candidate fault sets under comparison. The predicates require
/// f1 != f2; an equal pair is not a valid comparison.
struct FaultPair {
  VertexSet f1;
  VertexSet f2;
};

/// PMC: a test edge from a fault-free tester into the symmetric difference.
struct PmcWitness {
  int tester = -1;
  int testee = -1;
};

/// MM*: the vertex triple realizing one of the three comparison conditions.
/// condition 1: u, w fault-free, v in the symmetric difference, uv and uw edges;
/// condition 2: u, v in F1 - F2, w fault-free, uw and vw edges;
/// condition 3: u, v in F2 - F1, w fault-free, uw and vw edges.
struct MmWitness {
  int condition = 0;
  int u = -1;
  int v = -1;
  int w = -1;
};

struct DistinguishabilityWitness {
  DiagModel model = DiagModel::Pmc;
  std::variant<PmcWitness, MmWitness> detail;
};

/// Row-level variants run against an adjacency snapshot, letting the engines
/// probe edge-deleted graphs without rebuilding Graph values. rows[v] is
/// N(v); f1/f2 share the rows' universe.
std::optional<DistinguishabilityWitness> pmc_distinguishable_rows(
    std::span<const VertexSet> rows, const VertexSet& f1, const VertexSet& f2);
std::optional<DistinguishabilityWitness> mm_distinguishable_rows(
    std::span<const VertexSet> rows, const VertexSet& f1, const VertexSet& f2);

/// Returns the witness of the first condition that fires, scanning fault-free
/// vertices in ascending id order, or nullopt when the pair is
/// indistinguishable. Throws when f1 == f2.
std::optional<DistinguishabilityWitness> pmc_distinguishable(const Graph& g, const VertexSet& f1,
                                                             const VertexSet& f2);
std::optional<DistinguishabilityWitness> mm_distinguishable(const Graph& g, const VertexSet& f1,
                                                            const VertexSet& f2);
std::optional<DistinguishabilityWitness> distinguishable(const Graph& g, DiagModel model,
                                                         const VertexSet& f1, const VertexSet& f2);

/// Re-checks a witness against the raw definition it claims to satisfy.
bool witness_valid(const Graph& g, const VertexSet& f1, const VertexSet& f2,
                   const DistinguishabilityWitness& w);

const char* model_name(DiagModel model);      // "pmc" / "mm_star"
const char* model_flag_name(DiagModel model); // "pmc" / "mm-star"

}  // namespace netdiag
