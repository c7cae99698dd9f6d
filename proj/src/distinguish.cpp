#include "netdiag/distinguish.hpp"

#include <stdexcept>

namespace netdiag {

namespace {

void check_pair(std::span<const VertexSet> rows, const VertexSet& f1, const VertexSet& f2) {
  const int n = static_cast<int>(rows.size());
  if (f1.universe() != n || f2.universe() != n) {
    throw std::invalid_argument("fault sets must live on the graph's vertex set");
  }
  if (f1 == f2) throw std::invalid_argument("fault sets must be distinct");
}

}  // namespace

std::optional<DistinguishabilityWitness> pmc_distinguishable_rows(std::span<const VertexSet> rows,
                                                                  const VertexSet& f1,
                                                                  const VertexSet& f2) {
  check_pair(rows, f1, f2);
  const int n = static_cast<int>(rows.size());
  VertexSet diff = f1 ^ f2;
  VertexSet both = f1 | f2;
  // Distinguishable iff some edge joins V - (F1 ∪ F2) to F1 △ F2,
  // i.e. N(F1 △ F2) is not contained in F1 ∪ F2.
  for (int u = 0; u < n; ++u) {
    if (both.test(u)) continue;
    if (rows[static_cast<std::size_t>(u)].intersects(diff)) {
      int v = (rows[static_cast<std::size_t>(u)] & diff).first();
      return DistinguishabilityWitness{DiagModel::Pmc, PmcWitness{u, v}};
    }
  }
  return std::nullopt;
}

std::optional<DistinguishabilityWitness> mm_distinguishable_rows(std::span<const VertexSet> rows,
                                                                 const VertexSet& f1,
                                                                 const VertexSet& f2) {
  check_pair(rows, f1, f2);
  const int n = static_cast<int>(rows.size());
  VertexSet diff = f1 ^ f2;
  VertexSet both = f1 | f2;
  VertexSet only1 = f1 - f2;
  VertexSet only2 = f2 - f1;
  // One ascending pass over fault-free vertices; at each, the three
  // conditions are tried in order, which fixes the reported witness.
  for (int x = 0; x < n; ++x) {
    if (both.test(x)) continue;
    const VertexSet& nb = rows[static_cast<std::size_t>(x)];
    if (nb.intersects(diff)) {
      VertexSet outside_nb = nb - both;
      if (!outside_nb.empty()) {
        int v = (nb & diff).first();
        return DistinguishabilityWitness{DiagModel::MmStar, MmWitness{1, x, v, outside_nb.first()}};
      }
    }
    VertexSet in1 = nb & only1;
    if (in1.count() >= 2) {
      int u = in1.first();
      return DistinguishabilityWitness{DiagModel::MmStar, MmWitness{2, u, in1.next(u), x}};
    }
    VertexSet in2 = nb & only2;
    if (in2.count() >= 2) {
      int u = in2.first();
      return DistinguishabilityWitness{DiagModel::MmStar, MmWitness{3, u, in2.next(u), x}};
    }
  }
  return std::nullopt;
}

std::optional<DistinguishabilityWitness> pmc_distinguishable(const Graph& g, const VertexSet& f1,
                                                             const VertexSet& f2) {
  return pmc_distinguishable_rows(g.adjacency(), f1, f2);
}

std::optional<DistinguishabilityWitness> mm_distinguishable(const Graph& g, const VertexSet& f1,
                                                            const VertexSet& f2) {
  return mm_distinguishable_rows(g.adjacency(), f1, f2);
}

std::optional<DistinguishabilityWitness> distinguishable(const Graph& g, DiagModel model,
                                                         const VertexSet& f1, const VertexSet& f2) {
  return model == DiagModel::Pmc ? pmc_distinguishable(g, f1, f2) : mm_distinguishable(g, f1, f2);
}

bool witness_valid(const Graph& g, const VertexSet& f1, const VertexSet& f2,
                   const DistinguishabilityWitness& w) {
  VertexSet diff = f1 ^ f2;
  VertexSet both = f1 | f2;
  if (w.model == DiagModel::Pmc) {
    const auto* pw = std::get_if<PmcWitness>(&w.detail);
    if (pw == nullptr) return false;
    return !both.test(pw->tester) && diff.test(pw->testee) && g.has_edge(pw->tester, pw->testee);
  }
  const auto* mw = std::get_if<MmWitness>(&w.detail);
  if (mw == nullptr) return false;
  VertexSet only1 = f1 - f2;
  VertexSet only2 = f2 - f1;
  switch (mw->condition) {
    case 1:
      return !both.test(mw->u) && !both.test(mw->w) && mw->u != mw->w && diff.test(mw->v) &&
             g.has_edge(mw->u, mw->v) && g.has_edge(mw->u, mw->w);
    case 2:
      return only1.test(mw->u) && only1.test(mw->v) && mw->u != mw->v && !both.test(mw->w) &&
             g.has_edge(mw->u, mw->w) && g.has_edge(mw->v, mw->w);
    case 3:
      return only2.test(mw->u) && only2.test(mw->v) && mw->u != mw->v && !both.test(mw->w) &&
             g.has_edge(mw->u, mw->w) && g.has_edge(mw->v, mw->w);
    default:
      return false;
  }
}

const char* model_name(DiagModel model) { return model == DiagModel::Pmc ? "pmc" : "mm_star"; }

const char* model_flag_name(DiagModel model) { return model == DiagModel::Pmc ? "pmc" : "mm-star"; }

}  // namespace netdiag
