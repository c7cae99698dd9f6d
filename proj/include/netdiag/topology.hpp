#pragma once

#include <string>
#include <vector>

#include "netdiag/graph.hpp"

namespace netdiag {

/// Base-4 coordinate of a balanced-hypercube vertex. digits[0] is a_0 and
/// is the least significant digit of the integer index.
struct BhCoordinate {
  std::vector<int> digits;

  int dimension() const { return static_cast<int>(digits.size()); }
  bool operator==(const BhCoordinate&) const = default;
};

int bh_index(const BhCoordinate& c);
BhCoordinate bh_coordinate(int n, int index);

/// Largest supported balanced-hypercube dimension (4^n vertices).
inline constexpr int kMaxBhDimension = 8;

/// BH_n: 4^n vertices, 2n-regular. Vertex (a_0,...,a_{n-1}) is adjacent to
///   ((a_0 ± 1) mod 4, a_1, ..., a_{n-1})
/// and, for each inner position 1 <= i <= n-1,
///   ((a_0 ± 1) mod 4, ..., (a_i + (-1)^{a_0}) mod 4, ...),
/// the sign (-1)^{a_0} taken from the vertex's own first digit. Labels are
/// coordinate tuples like "(3,1)".
Graph balanced_hypercube(int n);

/// 8-vertex cycle x1..x8 plus the four chords x_j x_{j+4}; 3-regular and
/// triangle-free but not bipartite.
Graph g8_graph();

/// G_{k+1,k+1}: complete bipartite graph on (k+1)+(k+1) vertices minus a
/// perfect matching (x_i ~ y_j iff i != j); k-regular.
Graph crown_graph(int k);

/// Binary n-cube on 2^n vertices.
Graph hypercube_graph(int n);

/// Cycle C_m, m >= 3.
Graph cycle_graph(int m);

struct TopologyKind {
  enum class Kind { BalancedHypercube, G8, Crown, Hypercube, Cycle };
  Kind kind = Kind::BalancedHypercube;
  int param = 1;  // n for bh/hypercube, k for crown, m for cycle; unused for g8

  static TopologyKind balanced_hypercube(int n) { return {Kind::BalancedHypercube, n}; }
  static TopologyKind g8() { return {Kind::G8, 0}; }
  static TopologyKind crown(int k) { return {Kind::Crown, k}; }
  static TopologyKind hypercube(int n) { return {Kind::Hypercube, n}; }
  static TopologyKind cycle(int m) { return {Kind::Cycle, m}; }

  bool operator==(const TopologyKind&) const = default;
};

Graph build_topology(const TopologyKind& kind);
std::string topology_name(const TopologyKind& kind);

}  // namespace netdiag
