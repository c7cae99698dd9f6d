#include <doctest.h>

#include <algorithm>

#include "netdiag/diagnose.hpp"
#include "netdiag/syndrome.hpp"
#include "netdiag/topology.hpp"
#include "oracles.hpp"

using namespace netdiag;
using namespace netdiag::testing;

TEST_CASE("test enumeration") {
  Graph c4 = cycle_graph(4);
  CHECK(enumerate_tests(c4, DiagModel::Pmc).size() == 8);
  CHECK(enumerate_tests(c4, DiagModel::MmStar).size() == 4);
  CHECK(enumerate_tests(balanced_hypercube(2), DiagModel::MmStar).size() == 96);

  auto pmc = enumerate_tests(c4, DiagModel::Pmc);
  CHECK(std::is_sorted(pmc.begin(), pmc.end()));
  CHECK(pmc.front() == TestUnit{0, 1, -1});

  auto mm = enumerate_tests(c4, DiagModel::MmStar);
  CHECK(mm.front() == TestUnit{0, 1, 3});
  for (const TestUnit& u : mm) CHECK(u.left < u.right);
}

TEST_CASE("syndrome generation") {
  Graph c4 = cycle_graph(4);

  SUBCASE("no faults means an all-zero syndrome") {
    for (DiagModel model : {DiagModel::Pmc, DiagModel::MmStar}) {
      Syndrome s = generate_syndrome(c4, {VertexSet(4), AdversaryPolicy::RandomSeeded, 3}, model);
      for (auto bit : s.bits) CHECK(bit == 0);
    }
  }

  SUBCASE("single fault on the cycle, silent adversary") {
    Syndrome s = generate_syndrome(c4, {VertexSet::of(4, {1}), AdversaryPolicy::AllZeros, 0},
                                   DiagModel::Pmc);
    for (std::size_t i = 0; i < s.units.size(); ++i) {
      const TestUnit& u = s.units[i];
      bool expected = u.actor != 1 && u.left == 1;
      CHECK(s.bits[i] == (expected ? 1 : 0));
    }
  }

  SUBCASE("single fault, shouting adversary") {
    Syndrome s = generate_syndrome(c4, {VertexSet::of(4, {1}), AdversaryPolicy::AllOnes, 0},
                                   DiagModel::Pmc);
    for (std::size_t i = 0; i < s.units.size(); ++i) {
      const TestUnit& u = s.units[i];
      bool expected = u.actor == 1 || u.left == 1;
      CHECK(s.bits[i] == (expected ? 1 : 0));
    }
  }

  SUBCASE("same seed, same syndrome") {
    FaultInjection inj{VertexSet::of(4, {0, 2}), AdversaryPolicy::RandomSeeded, 99};
    Syndrome a = generate_syndrome(c4, inj, DiagModel::MmStar);
    Syndrome b = generate_syndrome(c4, inj, DiagModel::MmStar);
    CHECK(a.bits == b.bits);
  }
}

TEST_CASE("consistent fault sets") {
  Graph c4 = cycle_graph(4);

  SUBCASE("all-zero syndrome at t = 0 decodes to the empty set") {
    Syndrome s = generate_syndrome(c4, {VertexSet(4), AdversaryPolicy::AllZeros, 0}, DiagModel::Pmc);
    auto sets = consistent_fault_sets(c4, s, 0);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].empty());
  }

  SUBCASE("the injected set is always consistent") {
    TestRng rng(31);
    for (DiagModel model : {DiagModel::Pmc, DiagModel::MmStar}) {
      for (int trial = 0; trial < 25; ++trial) {
        VertexSet f = random_vertex_set(rng, 4, 2);
        for (AdversaryPolicy policy :
             {AdversaryPolicy::AllZeros, AdversaryPolicy::AllOnes, AdversaryPolicy::RandomSeeded}) {
          Syndrome s = generate_syndrome(c4, {f, policy, static_cast<std::uint64_t>(trial)}, model);
          auto sets = consistent_fault_sets(c4, s, 2);
          CHECK(std::find(sets.begin(), sets.end(), f) != sets.end());
        }
      }
    }
  }

  SUBCASE("BH_1 under MM* cannot separate the antipodal singletons") {
    Graph bh1 = balanced_hypercube(1);
    Syndrome s = generate_syndrome(bh1, {VertexSet::of(4, {0}), AdversaryPolicy::AllZeros, 0},
                                   DiagModel::MmStar);
    auto sets = consistent_fault_sets(bh1, s, 1);
    CHECK(std::find(sets.begin(), sets.end(), VertexSet::of(4, {0})) != sets.end());
    CHECK(std::find(sets.begin(), sets.end(), VertexSet::of(4, {2})) != sets.end());
  }

  SUBCASE("domain mismatches are rejected") {
    Syndrome s = generate_syndrome(c4, {VertexSet(4), AdversaryPolicy::AllZeros, 0}, DiagModel::Pmc);
    CHECK_THROWS_AS(consistent_fault_sets(cycle_graph(5), s, 1), std::invalid_argument);
    s.bits.pop_back();
    CHECK_THROWS_AS(consistent_fault_sets(c4, s, 1), std::invalid_argument);
  }
}

namespace {

// Behavioral diagnosability: the largest t at which every fault set of
// size <= t decodes uniquely from every syndrome it can produce. The
// adversary is enumerated exhaustively over the unreliable units.
int behavioral_diagnosability(const Graph& g, DiagModel model) {
  const int n = g.vertex_count();
  auto units = enumerate_tests(g, model);
  for (int t = 1; t <= n; ++t) {
    SubsetLexEnumerator faults(n, t);
    bool all_unique = true;
    do {
      VertexSet f = VertexSet::from_ids(n, faults.ids());
      std::vector<std::size_t> unreliable;
      for (std::size_t i = 0; i < units.size(); ++i) {
        if (f.test(units[i].actor)) unreliable.push_back(i);
      }
      REQUIRE(unreliable.size() <= 12);
      Syndrome s;
      s.model = model;
      s.units = units;
      s.bits.assign(units.size(), 0);
      for (std::size_t i = 0; i < units.size(); ++i) {
        bool from_rule = model == DiagModel::Pmc
                             ? f.test(units[i].left)
                             : (f.test(units[i].left) || f.test(units[i].right));
        s.bits[i] = from_rule ? 1 : 0;
      }
      for (std::uint64_t outcome = 0; outcome < (std::uint64_t{1} << unreliable.size());
           ++outcome) {
        for (std::size_t b = 0; b < unreliable.size(); ++b) {
          s.bits[unreliable[b]] = (outcome >> b) & 1 ? 1 : 0;
        }
        auto sets = consistent_fault_sets(g, s, t);
        if (sets.size() != 1 || !(sets[0] == f)) {
          all_unique = false;
          break;
        }
      }
      if (!all_unique) break;
    } while (faults.advance());
    if (!all_unique) return t - 1;
  }
  return n;
}

}  // namespace

TEST_CASE("unique decoding happens exactly up to the diagnosability") {
  std::vector<Graph> corpus;
  corpus.push_back(balanced_hypercube(1));
  corpus.push_back(cycle_graph(5));
  corpus.push_back(Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  corpus.push_back(Graph(3, {{0, 1}, {1, 2}}));
  for (const Graph& g : corpus) {
    for (DiagModel model : {DiagModel::Pmc, DiagModel::MmStar}) {
      CHECK(behavioral_diagnosability(g, model) == diagnosability(g, model));
    }
  }
}

TEST_CASE("randomized decode round-trip on BH_2") {
  Graph bh2 = balanced_hypercube(2);
  TestRng rng(17);
  for (DiagModel model : {DiagModel::Pmc, DiagModel::MmStar}) {
    for (int trial = 0; trial < 12; ++trial) {
      VertexSet f = random_vertex_set(rng, 16, 4);
      for (AdversaryPolicy policy :
           {AdversaryPolicy::AllZeros, AdversaryPolicy::AllOnes, AdversaryPolicy::RandomSeeded}) {
        Syndrome s = generate_syndrome(bh2, {f, policy, static_cast<std::uint64_t>(trial)}, model);
        auto sets = consistent_fault_sets(bh2, s, 4);
        REQUIRE(sets.size() == 1);
        CHECK(sets[0] == f);
      }
    }
  }
}

TEST_CASE("decode refuses hopeless candidate enumerations") {
  Graph bh3 = balanced_hypercube(3);
  Syndrome s = generate_syndrome(bh3, {VertexSet(64), AdversaryPolicy::AllZeros, 0},
                                 DiagModel::Pmc);
  CHECK_THROWS_AS(consistent_fault_sets(bh3, s, 20), std::invalid_argument);
  // Small bounds stay fine on the same graph.
  auto sets = consistent_fault_sets(bh3, s, 1);
  REQUIRE(!sets.empty());
  CHECK(sets.front().empty());
}
