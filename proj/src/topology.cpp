#include "netdiag/topology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace netdiag {

int bh_index(const BhCoordinate& c) {
  if (c.digits.empty()) throw std::invalid_argument("bh_index: empty coordinate");
  int index = 0;
  int place = 1;
  for (int d : c.digits) {
    if (d < 0 || d > 3) throw std::invalid_argument("bh_index: digit out of range");
    index += d * place;
    place *= 4;
  }
  return index;
}

BhCoordinate bh_coordinate(int n, int index) {
  if (n < 1 || n > kMaxBhDimension) throw std::invalid_argument("bh_coordinate: dimension out of range");
  int limit = 1;
  for (int i = 0; i < n; ++i) limit *= 4;
  if (index < 0 || index >= limit) throw std::invalid_argument("bh_coordinate: index out of range");
  BhCoordinate c;
  c.digits.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    c.digits[static_cast<std::size_t>(i)] = index & 3;
    index >>= 2;
  }
  return c;
}

namespace {

std::string coordinate_label(const BhCoordinate& c) {
  std::string label = "(";
  for (std::size_t i = 0; i < c.digits.size(); ++i) {
    if (i > 0) label += ",";
    label += std::to_string(c.digits[i]);
  }
  label += ")";
  return label;
}

}  // namespace

Graph balanced_hypercube(int n) {
  if (n < 1 || n > kMaxBhDimension) {
    throw std::invalid_argument("balanced_hypercube: dimension out of range");
  }
  int vertex_count = 1;
  for (int i = 0; i < n; ++i) vertex_count *= 4;

  // Edges gathered through a set: at n=1 the two neighbor rules coincide and
  // the duplicates must collapse to keep the graph simple.
  std::set<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(vertex_count));
  for (int v = 0; v < vertex_count; ++v) {
    BhCoordinate c = bh_coordinate(n, v);
    labels.push_back(coordinate_label(c));
    const int a0 = c.digits[0];
    const int sign = (a0 % 2 == 0) ? 1 : -1;
    for (int step : {1, 3}) {  // a_0 + 1 and a_0 - 1 (mod 4)
      BhCoordinate nb = c;
      nb.digits[0] = (a0 + step) & 3;
      edges.insert(Edge::normalized(v, bh_index(nb)));
      for (int i = 1; i < n; ++i) {
        BhCoordinate inner = nb;
        inner.digits[static_cast<std::size_t>(i)] = (c.digits[static_cast<std::size_t>(i)] + sign + 4) & 3;
        edges.insert(Edge::normalized(v, bh_index(inner)));
      }
    }
  }

  std::vector<std::pair<int, int>> edge_list;
  edge_list.reserve(edges.size());
  for (const Edge& e : edges) edge_list.emplace_back(e.u, e.v);
  return Graph(vertex_count, edge_list, std::move(labels));
}

Graph g8_graph() {
  // x_i maps to id i-1.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
  for (int j = 0; j < 4; ++j) edges.emplace_back(j, j + 4);
  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i) labels.push_back("x" + std::to_string(i));
  return Graph(8, edges, std::move(labels));
}

Graph crown_graph(int k) {
  if (k < 2) throw std::invalid_argument("crown_graph: k must be at least 2");
  const int side = k + 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      if (i != j) edges.emplace_back(i, side + j);
    }
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= side; ++i) labels.push_back("x" + std::to_string(i));
  for (int j = 1; j <= side; ++j) labels.push_back("y" + std::to_string(j));
  return Graph(2 * side, edges, std::move(labels));
}

Graph hypercube_graph(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("hypercube_graph: dimension out of range");
  const int vertex_count = 1 << n;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < vertex_count; ++v) {
    for (int b = 0; b < n; ++b) {
      int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(vertex_count));
  for (int v = 0; v < vertex_count; ++v) {
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int b = 0; b < n; ++b) {
      if (v & (1 << b)) bits[static_cast<std::size_t>(n - 1 - b)] = '1';
    }
    labels.push_back(bits);
  }
  return Graph(vertex_count, edges, std::move(labels));
}

Graph cycle_graph(int m) {
  if (m < 3) throw std::invalid_argument("cycle_graph: need at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  return Graph(m, edges);
}

Graph build_topology(const TopologyKind& kind) {
  switch (kind.kind) {
    case TopologyKind::Kind::BalancedHypercube:
      return balanced_hypercube(kind.param);
    case TopologyKind::Kind::G8:
      return g8_graph();
    case TopologyKind::Kind::Crown:
      return crown_graph(kind.param);
    case TopologyKind::Kind::Hypercube:
      return hypercube_graph(kind.param);
    case TopologyKind::Kind::Cycle:
      return cycle_graph(kind.param);
  }
  throw std::logic_error("build_topology: unknown kind");
}

std::string topology_name(const TopologyKind& kind) {
  switch (kind.kind) {
    case TopologyKind::Kind::BalancedHypercube:
      return "bh(" + std::to_string(kind.param) + ")";
    case TopologyKind::Kind::G8:
      return "g8";
    case TopologyKind::Kind::Crown:
      return "crown(" + std::to_string(kind.param) + ")";
    case TopologyKind::Kind::Hypercube:
      return "hypercube(" + std::to_string(kind.param) + ")";
    case TopologyKind::Kind::Cycle:
      return "cycle(" + std::to_string(kind.param) + ")";
  }
  return "unknown";
}

}  // namespace netdiag
