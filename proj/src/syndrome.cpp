#include "netdiag/syndrome.hpp"

#include <random>
#include <stdexcept>

#include "netdiag/subsets.hpp"

namespace netdiag {

std::vector<TestUnit> enumerate_tests(const Graph& g, DiagModel model) {
  std::vector<TestUnit> units;
  const int n = g.vertex_count();
  if (model == DiagModel::Pmc) {
    for (int u = 0; u < n; ++u) {
      const VertexSet& nb = g.neighbors(u);
      for (int v = nb.first(); v >= 0; v = nb.next(v)) units.push_back({u, v, -1});
    }
    return units;
  }
  for (int w = 0; w < n; ++w) {
    const VertexSet& nb = g.neighbors(w);
    for (int u = nb.first(); u >= 0; u = nb.next(u)) {
      for (int v = nb.next(u); v >= 0; v = nb.next(v)) units.push_back({w, u, v});
    }
  }
  return units;
}

namespace {

bool deterministic_outcome(const TestUnit& unit, DiagModel model, const VertexSet& faults) {
  if (model == DiagModel::Pmc) return faults.test(unit.left);
  return faults.test(unit.left) || faults.test(unit.right);
}

}  // namespace

Syndrome generate_syndrome(const Graph& g, const FaultInjection& inj, DiagModel model) {
  if (inj.faults.universe() != g.vertex_count()) {
    throw std::invalid_argument("generate_syndrome: fault set universe mismatch");
  }
  Syndrome s;
  s.model = model;
  s.units = enumerate_tests(g, model);
  s.bits.reserve(s.units.size());
  std::mt19937_64 rng(inj.seed);
  for (const TestUnit& unit : s.units) {
    bool bit;
    if (!inj.faults.test(unit.actor)) {
      bit = deterministic_outcome(unit, model, inj.faults);
    } else {
      switch (inj.policy) {
        case AdversaryPolicy::AllZeros:
          bit = false;
          break;
        case AdversaryPolicy::AllOnes:
          bit = true;
          break;
        case AdversaryPolicy::RandomSeeded:
          bit = (rng() & 1) != 0;
          break;
        default:
          bit = false;
          break;
      }
    }
    s.bits.push_back(bit ? 1 : 0);
  }
  return s;
}

std::vector<VertexSet> consistent_fault_sets(const Graph& g, const Syndrome& s, int t) {
  if (t < 0) throw std::invalid_argument("consistent_fault_sets: t must be non-negative");
  if (s.units != enumerate_tests(g, s.model) || s.bits.size() != s.units.size()) {
    throw std::invalid_argument("consistent_fault_sets: syndrome domain does not match the graph");
  }
  const int n = g.vertex_count();
  if (subset_count(n, std::min(t, n)) > 2000000) {
    throw std::invalid_argument(
        "consistent_fault_sets: candidate enumeration too large at this t; lower t or shrink the graph");
  }
  std::vector<VertexSet> out;
  SubsetLexEnumerator candidates(n, std::min(t, n));
  VertexSet f(n);
  do {
    f.clear();
    for (int v : candidates.ids()) f.set(v);
    bool consistent = true;
    for (std::size_t i = 0; i < s.units.size(); ++i) {
      const TestUnit& unit = s.units[i];
      if (f.test(unit.actor)) continue;  // unreliable, unconstrained
      if (deterministic_outcome(unit, s.model, f) != (s.bits[i] != 0)) {
        consistent = false;
        break;
      }
    }
    if (consistent) out.push_back(f);
  } while (candidates.advance());
  return out;
}

}  // namespace netdiag
