#include <doctest.h>

#include "netdiag/graph.hpp"
#include "netdiag/topology.hpp"

using namespace netdiag;

TEST_CASE("coordinate codec") {
  CHECK(bh_index(BhCoordinate{{3, 1}}) == 7);
  CHECK(bh_coordinate(1, 2) == BhCoordinate{{2}});
  CHECK_THROWS_AS(bh_index(BhCoordinate{{4}}), std::invalid_argument);
  CHECK_THROWS_AS(bh_index(BhCoordinate{{}}), std::invalid_argument);
  CHECK_THROWS_AS(bh_coordinate(2, 16), std::invalid_argument);
  CHECK_THROWS_AS(bh_coordinate(2, -1), std::invalid_argument);
  CHECK_THROWS_AS(bh_coordinate(0, 0), std::invalid_argument);

  for (int n = 1; n <= 3; ++n) {
    int limit = 1 << (2 * n);
    for (int index = 0; index < limit; ++index) {
      BhCoordinate c = bh_coordinate(n, index);
      CHECK(c.dimension() == n);
      CHECK(bh_index(c) == index);
    }
  }
}

TEST_CASE("balanced hypercube generator") {
  CHECK_THROWS_AS(balanced_hypercube(0), std::invalid_argument);

  SUBCASE("BH_1 is the 4-cycle 0-1-2-3-0") {
    Graph bh1 = balanced_hypercube(1);
    CHECK(bh1.vertex_count() == 4);
    CHECK(bh1.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(bh1.labels()[2] == "(2)");
  }

  SUBCASE("BH_2 size, degree, and the neighbors of (0,0)") {
    Graph bh2 = balanced_hypercube(2);
    CHECK(bh2.vertex_count() == 16);
    CHECK(bh2.edge_count() == 32);
    CHECK(structural_profile(bh2).regular_degree == 4);
    CHECK(bh2.neighbors(0) == VertexSet::of(16, {1, 3, 5, 7}));
    CHECK(bh2.labels()[7] == "(3,1)");
  }

  SUBCASE("structural invariants for n = 1..3") {
    for (int n = 1; n <= 3; ++n) {
      Graph g = balanced_hypercube(n);
      CHECK(g.vertex_count() == 1 << (2 * n));
      StructuralProfile p = structural_profile(g);
      CHECK(p.connected);
      CHECK(p.bipartite);
      CHECK(p.triangle_free);
      CHECK(p.regular_degree == 2 * n);
    }
  }

  SUBCASE("each vertex's twin flips the first digit by two") {
    for (int n : {2, 3}) {
      Graph g = balanced_hypercube(n);
      for (int u = 0; u < g.vertex_count(); ++u) {
        BhCoordinate c = bh_coordinate(n, u);
        c.digits[0] = (c.digits[0] + 2) & 3;
        int w = bh_index(c);
        CHECK(g.neighbors(u) == g.neighbors(w));
        // And no third vertex shares the full neighborhood.
        int full_matches = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
          if (v != u && (g.neighbors(u) & g.neighbors(v)).count() == 2 * n) ++full_matches;
        }
        CHECK(full_matches == 1);
      }
    }
  }

  SUBCASE("common neighbor counts stay in {0, 2, 2n}") {
    for (int n : {1, 2, 3}) {
      Graph g = balanced_hypercube(n);
      CommonNeighborStats stats = common_neighbor_stats(g);
      for (const auto& [count, pairs] : stats.histogram) {
        CHECK((count == 0 || count == 2 || count == 2 * n));
      }
      CHECK(stats.max_common == 2 * n);
    }
  }
}

TEST_CASE("g8 reference graph") {
  Graph g = g8_graph();
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 12);
  StructuralProfile p = structural_profile(g);
  CHECK(p.regular_degree == 3);
  CHECK(p.triangle_free);
  CHECK_FALSE(p.bipartite);
  // cycle edge plus both chord endpoints of x1: x2, x8, x5
  CHECK(g.neighbors(0) == VertexSet::of(8, {1, 7, 4}));
}

TEST_CASE("crown graphs") {
  CHECK_THROWS_AS(crown_graph(1), std::invalid_argument);
  Graph c3 = crown_graph(3);
  CHECK(c3.vertex_count() == 8);
  StructuralProfile p = structural_profile(c3);
  CHECK(p.regular_degree == 3);
  CHECK(p.bipartite);
  for (int k : {2, 3, 4}) {
    Graph g = crown_graph(k);
    StructuralProfile prof = structural_profile(g);
    CHECK(prof.regular_degree == k);
    CHECK(prof.triangle_free);
    CHECK(common_neighbor_stats(g).max_common == k - 1);
  }
}

TEST_CASE("hypercubes") {
  Graph q3 = hypercube_graph(3);
  CHECK(q3.vertex_count() == 8);
  StructuralProfile p = structural_profile(q3);
  CHECK(p.regular_degree == 3);
  CHECK(p.bipartite);
  CHECK(p.triangle_free);
  for (int n : {3, 4}) {
    CHECK(common_neighbor_stats(hypercube_graph(n)).max_common == 2);
  }
}

TEST_CASE("cycles") {
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  Graph c4 = cycle_graph(4);
  CHECK(c4.edges() == balanced_hypercube(1).edges());
  CHECK(structural_profile(cycle_graph(5)).regular_degree == 2);
}

TEST_CASE("topology dispatch and names") {
  CHECK(build_topology(TopologyKind::balanced_hypercube(2)).vertex_count() == 16);
  CHECK(build_topology(TopologyKind::g8()).vertex_count() == 8);
  CHECK(build_topology(TopologyKind::crown(2)).vertex_count() == 6);
  CHECK(build_topology(TopologyKind::hypercube(4)).vertex_count() == 16);
  CHECK(build_topology(TopologyKind::cycle(6)).vertex_count() == 6);
  CHECK(topology_name(TopologyKind::crown(3)) == "crown(3)");
}

TEST_CASE("dimension four stays within the generator's range") {
  Graph bh4 = balanced_hypercube(4);
  CHECK(bh4.vertex_count() == 256);
  StructuralProfile p = structural_profile(bh4);
  CHECK(p.regular_degree == 8);
  CHECK(p.bipartite);
  CHECK(p.connected);
  CHECK(p.triangle_free);
  BhCoordinate c = bh_coordinate(4, 137);
  CHECK(bh_index(c) == 137);
  CHECK(bh4.labels()[137] == "(1,2,0,2)");
}
