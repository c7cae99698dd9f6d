#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "netdiag/graph.hpp"

namespace netdiag {

/// Adjacency rows packed into single 64-bit words. The exact engines run
/// their inner loops on this; it only exists for graphs with at most 64
/// vertices.
struct WordGraph {
  int n = 0;
  std::vector<std::uint64_t> rows;

  static WordGraph from(const Graph& g) {
    if (g.vertex_count() > 64) {
      throw std::invalid_argument("WordGraph: graph has more than 64 vertices");
    }
    WordGraph wg;
    wg.n = g.vertex_count();
    wg.rows.resize(static_cast<std::size_t>(wg.n));
    for (int v = 0; v < wg.n; ++v) wg.rows[static_cast<std::size_t>(v)] = g.neighbors(v).mask64();
    return wg;
  }

  std::uint64_t full_mask() const {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  void remove_edge(int u, int v) {
    rows[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    rows[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
  }
};

/// Boolean-only forms of the distinguishability predicates. Callers ensure
/// f1 != f2.
inline bool pmc_distinguishable_mask(const WordGraph& wg, std::uint64_t f1, std::uint64_t f2) {
  const std::uint64_t diff = f1 ^ f2;
  const std::uint64_t outside = wg.full_mask() & ~(f1 | f2);
  for (std::uint64_t rest = outside; rest != 0; rest &= rest - 1) {
    int u = std::countr_zero(rest);
    if (wg.rows[static_cast<std::size_t>(u)] & diff) return true;
  }
  return false;
}

inline bool mm_distinguishable_mask(const WordGraph& wg, std::uint64_t f1, std::uint64_t f2) {
  const std::uint64_t diff = f1 ^ f2;
  const std::uint64_t outside = wg.full_mask() & ~(f1 | f2);
  const std::uint64_t only1 = f1 & ~f2;
  const std::uint64_t only2 = f2 & ~f1;
  for (std::uint64_t rest = outside; rest != 0; rest &= rest - 1) {
    const std::uint64_t nb = wg.rows[static_cast<std::size_t>(std::countr_zero(rest))];
    if ((nb & diff) && (nb & outside)) return true;                       // condition 1
    const std::uint64_t in1 = nb & only1;
    if (in1 & (in1 - 1)) return true;                                     // condition 2
    const std::uint64_t in2 = nb & only2;
    if (in2 & (in2 - 1)) return true;                                     // condition 3
  }
  return false;
}

}  // namespace netdiag
