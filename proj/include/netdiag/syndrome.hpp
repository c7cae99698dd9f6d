#pragma once

#include <cstdint>
#include <vector>

#include "netdiag/distinguish.hpp"
#include "netdiag/graph.hpp"

namespace netdiag {

/// One test (PMC) or comparison (MM*). Under PMC the actor tests `left`
/// and `right` is -1; under MM* the actor compares `left` and `right`
/// with left < right, both adjacent to the actor.
struct TestUnit {
  int actor = -1;
  int left = -1;
  int right = -1;

  bool operator==(const TestUnit&) const = default;
  auto operator<=>(const TestUnit&) const = default;
};

/// PMC: every ordered adjacent pair (2|E| tests). MM*: every triple
/// (w; u, v) with u, v distinct neighbors of w and u < v. Lexicographic
/// order in both cases.
std::vector<TestUnit> enumerate_tests(const Graph& g, DiagModel model);

enum class AdversaryPolicy { AllZeros, AllOnes, RandomSeeded };

struct FaultInjection {
  VertexSet faults;
  AdversaryPolicy policy = AdversaryPolicy::AllZeros;
  std::uint64_t seed = 0;
};

/// Complete outcome vector over enumerate_tests(g, model).
struct Syndrome {
  DiagModel model = DiagModel::Pmc;
  std::vector<TestUnit> units;
  std::vector<std::uint8_t> bits;
};

/// Fault-free actors report the deterministic rule: under PMC the outcome
/// is 1 iff the testee is faulty; under MM* it is 1 iff at least one
/// compared processor is faulty. Faulty actors are unreliable and answer
/// per the adversary policy; RandomSeeded draws one bit per unreliable
/// unit in unit order, so the result is a pure function of (faults, seed).
Syndrome generate_syndrome(const Graph& g, const FaultInjection& inj, DiagModel model);

/// All fault sets F with |F| <= t that could have produced the syndrome:
/// every unit whose actor lies outside F must match the deterministic
/// rule, units with a faulty actor are unconstrained. Lexicographic order.
std::vector<VertexSet> consistent_fault_sets(const Graph& g, const Syndrome& s, int t);

}  // namespace netdiag
