#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netdiag/vertex_set.hpp"

namespace netdiag {

/// Undirected edge stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge normalized(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Sorted duplicate-free collection of normalized edges. Membership in a
/// particular graph is validated by the operations that consume it.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);

  static EdgeSet of(std::initializer_list<std::pair<int, int>> pairs);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(int u, int v) const;

  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<Edge> edges_;
};

/// Immutable simple undirected graph with dense vertex ids 0..n-1.
/// Adjacency is kept as one VertexSet row per vertex; rows stay symmetric
/// by construction. Values are safe to share across threads.
class Graph {
 public:
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
        std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int degree(int v) const;
  bool has_edge(int u, int v) const;

  const VertexSet& neighbors(int v) const;
  const std::vector<VertexSet>& adjacency() const { return adj_; }

  /// N(A): union of the members' neighborhoods minus A itself.
  VertexSet external_neighborhood(const VertexSet& a) const;

  /// New graph with the given edges removed. Every member of fe must be an
  /// edge of this graph. Labels carry over.
  Graph delete_edges(const EdgeSet& fe) const;

  const std::vector<std::string>& labels() const { return labels_; }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

struct StructuralProfile {
  bool connected = false;
  bool bipartite = false;
  /// Per-vertex side (0/1) when bipartite, empty otherwise.
  std::vector<std::uint8_t> two_coloring;
  bool triangle_free = false;
  /// Set when every degree is equal.
  std::optional<int> regular_degree;
  int min_degree = 0;
  int max_degree = 0;
};

StructuralProfile structural_profile(const Graph& g);

/// Exact vertex connectivity. Complete graphs (and the one-vertex graph)
/// yield vertex_count - 1 by convention; everything else is the minimum
/// over local vertex connectivities computed by unit-capacity max-flow on
/// the split digraph.
int vertex_connectivity(const Graph& g);

struct CommonNeighborStats {
  /// C(G): the largest |N(u) ∩ N(v)| over unordered pairs u != v.
  int max_common = 0;
  /// histogram[c] = number of unordered pairs sharing exactly c neighbors.
  std::map<int, long long> histogram;
};

CommonNeighborStats common_neighbor_stats(const Graph& g);

}  // namespace netdiag
