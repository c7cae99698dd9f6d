#include "netdiag/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace netdiag {

EdgeSet::EdgeSet(std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("EdgeSet: self-loop");
    e = Edge::normalized(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("EdgeSet: duplicate edge");
  }
  edges_ = std::move(edges);
}

EdgeSet EdgeSet::of(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return EdgeSet(std::move(edges));
}

bool EdgeSet::contains(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge::normalized(u, v));
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels)
    : n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count) {
    throw std::invalid_argument("Graph: label count does not match vertex count");
  }
  adj_.assign(static_cast<std::size_t>(n_), VertexSet(n_));
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw std::invalid_argument("Graph: vertex id out of range");
    }
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (adj_[static_cast<std::size_t>(u)].test(v)) {
      throw std::invalid_argument("Graph: duplicate edge");
    }
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
    edges_.push_back(Edge::normalized(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  labels_ = std::move(labels);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex id out of range");
}

int Graph::degree(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)].count();
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return u != v && adj_[static_cast<std::size_t>(u)].test(v);
}

const VertexSet& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

VertexSet Graph::external_neighborhood(const VertexSet& a) const {
  if (a.universe() != n_) throw std::invalid_argument("external_neighborhood: universe mismatch");
  VertexSet out(n_);
  for (int v = a.first(); v >= 0; v = a.next(v)) out |= adj_[static_cast<std::size_t>(v)];
  out -= a;
  return out;
}

Graph Graph::delete_edges(const EdgeSet& fe) const {
  for (const Edge& e : fe.edges()) {
    if (e.u < 0 || e.v >= n_ || !has_edge(e.u, e.v)) {
      throw std::invalid_argument("delete_edges: not an edge of the graph");
    }
  }
  std::vector<std::pair<int, int>> kept;
  kept.reserve(edges_.size() - fe.size());
  for (const Edge& e : edges_) {
    if (!fe.contains(e.u, e.v)) kept.emplace_back(e.u, e.v);
  }
  return Graph(n_, kept, labels_);
}

StructuralProfile structural_profile(const Graph& g) {
  const int n = g.vertex_count();
  StructuralProfile p;

  p.min_degree = 0;
  p.max_degree = 0;
  if (n > 0) {
    p.min_degree = g.degree(0);
    p.max_degree = g.degree(0);
    for (int v = 1; v < n; ++v) {
      p.min_degree = std::min(p.min_degree, g.degree(v));
      p.max_degree = std::max(p.max_degree, g.degree(v));
    }
  }
  if (p.min_degree == p.max_degree) p.regular_degree = p.min_degree;

  // BFS once for both connectivity and the 2-coloring.
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  p.bipartite = true;
  int reached = 0;
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    ++components;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      ++reached;
      const VertexSet& nb = g.neighbors(u);
      for (int w = nb.first(); w >= 0; w = nb.next(w)) {
        if (color[static_cast<std::size_t>(w)] == -1) {
          color[static_cast<std::size_t>(w)] = color[static_cast<std::size_t>(u)] ^ 1;
          q.push(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
          p.bipartite = false;
        }
      }
    }
  }
  p.connected = components <= 1 && reached == n;
  if (p.bipartite) {
    p.two_coloring.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      p.two_coloring[static_cast<std::size_t>(v)] =
          static_cast<std::uint8_t>(color[static_cast<std::size_t>(v)] == 1);
    }
  }

  p.triangle_free = true;
  for (const Edge& e : g.edges()) {
    if (g.neighbors(e.u).intersects(g.neighbors(e.v))) {
      p.triangle_free = false;
      break;
    }
  }
  return p;
}

namespace {

// Unit-capacity max-flow on the vertex-split digraph; counts internally
// disjoint s-t paths for nonadjacent s, t. Node 2v is v_in, 2v+1 is v_out.
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : n_(g.vertex_count()) {
    head_.assign(static_cast<std::size_t>(2 * n_), std::vector<int>{});
    for (int v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v, n_);
      add_arc(2 * e.v + 1, 2 * e.u, n_);
    }
    base_cap_ = cap_;
  }

  int max_flow(int s, int t) {
    cap_ = base_cap_;
    int source = 2 * s + 1;
    int sink = 2 * t;
    int flow = 0;
    while (augment(source, sink)) ++flow;
    return flow;
  }

 private:
  void add_arc(int a, int b, int cap) {
    head_[static_cast<std::size_t>(a)].push_back(static_cast<int>(to_.size()));
    to_.push_back(b);
    cap_.push_back(cap);
    head_[static_cast<std::size_t>(b)].push_back(static_cast<int>(to_.size()));
    to_.push_back(a);
    cap_.push_back(0);
  }

  bool augment(int source, int sink) {
    std::vector<int> prev_arc(static_cast<std::size_t>(2 * n_), -1);
    std::queue<int> q;
    q.push(source);
    prev_arc[static_cast<std::size_t>(source)] = -2;
    while (!q.empty() && prev_arc[static_cast<std::size_t>(sink)] == -1) {
      int u = q.front();
      q.pop();
      for (int a : head_[static_cast<std::size_t>(u)]) {
        int w = to_[static_cast<std::size_t>(a)];
        if (cap_[static_cast<std::size_t>(a)] > 0 && prev_arc[static_cast<std::size_t>(w)] == -1) {
          prev_arc[static_cast<std::size_t>(w)] = a;
          q.push(w);
        }
      }
    }
    if (prev_arc[static_cast<std::size_t>(sink)] == -1) return false;
    for (int v = sink; v != source;) {
      int a = prev_arc[static_cast<std::size_t>(v)];
      cap_[static_cast<std::size_t>(a)] -= 1;
      cap_[static_cast<std::size_t>(a ^ 1)] += 1;
      v = to_[static_cast<std::size_t>(a ^ 1)];
    }
    return true;
  }

  int n_;
  std::vector<std::vector<int>> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> base_cap_;
};

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return n == 0 ? 0 : 0;

  bool complete = true;
  for (int v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
  if (complete) return n - 1;

  // A minimum separator cannot contain all of {v0} ∪ N(v0), so taking the
  // minimum of local connectivities from those sources to their
  // non-neighbors is exact.
  SplitFlow flow(g);
  std::vector<int> sources{0};
  const VertexSet& nb0 = g.neighbors(0);
  for (int v = nb0.first(); v >= 0; v = nb0.next(v)) sources.push_back(v);

  int best = n - 1;
  for (int s : sources) {
    for (int t = 0; t < n; ++t) {
      if (t == s || g.has_edge(s, t)) continue;
      best = std::min(best, flow.max_flow(s, t));
      if (best == 0) return 0;
    }
  }
  return best;
}

CommonNeighborStats common_neighbor_stats(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("common_neighbor_stats: need at least two vertices");
  CommonNeighborStats stats;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int c = (g.neighbors(u) & g.neighbors(v)).count();
      stats.max_common = std::max(stats.max_common, c);
      ++stats.histogram[c];
    }
  }
  return stats;
}

}  // namespace netdiag
