#include "netdiag/diagnose.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "netdiag/parallel.hpp"
#include "netdiag/subsets.hpp"
#include "netdiag/word_graph.hpp"

namespace netdiag {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Caps keeping exhaustive runs at desk scale; larger inputs are refused
// with an explanation instead of silently downgraded.
constexpr int kMaxExactVertices = 20;
constexpr std::uint64_t kMaxCandidateSubsets = 50000;
constexpr std::uint64_t kMaxEdgeFaultSets = 5000000;

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t bounded(std::uint64_t k) { return k == 0 ? 0 : next() % k; }
};

// Independent stream per trial index so sampled results do not depend on
// how trials are split across workers.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 mixer(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
  return mixer.next();
}

bool distinguishable_mask(const WordGraph& wg, DiagModel model, std::uint64_t f1,
                          std::uint64_t f2) {
  return model == DiagModel::Pmc ? pmc_distinguishable_mask(wg, f1, f2)
                                 : mm_distinguishable_mask(wg, f1, f2);
}

void check_pair_enum_size(int n, int cap) {
  if (subset_count(n, cap) > kMaxCandidateSubsets) {
    throw std::invalid_argument(
        "exhaustive pair enumeration refused: too many candidate fault sets at this size");
  }
}

// Least (F1, F2) in lexicographic sequence order with both sizes <= t that
// is indistinguishable, or nullopt when the graph is t-diagnosable.
std::optional<std::pair<std::uint64_t, std::uint64_t>> first_indistinguishable_pair(
    const WordGraph& wg, int t, DiagModel model) {
  const int cap = std::min(t, wg.n);
  check_pair_enum_size(wg.n, cap);
  SubsetLexEnumerator outer(wg.n, cap);
  do {
    const std::uint64_t f1 = outer.mask();
    SubsetLexEnumerator inner = outer;
    while (inner.advance()) {
      if (!distinguishable_mask(wg, model, f1, inner.mask())) {
        return std::make_pair(f1, inner.mask());
      }
    }
  } while (outer.advance());
  return std::nullopt;
}

// Exact diagnosability by upward search; t(G) <= n - 1 for n >= 1, so the
// loop always terminates with a failing level.
int exact_value_by_pairs(const WordGraph& wg, DiagModel model) {
  for (int t = 1; t <= wg.n; ++t) {
    if (first_indistinguishable_pair(wg, t, model)) return t - 1;
  }
  return wg.n;
}

// min over nonempty S of ceil(|S|/2) + |N(S)| - 1, via a union table
// indexed by subset mask (lowbit recurrence). scratch persists across
// calls within a worker.
int pmc_core_value(const std::vector<std::uint64_t>& rows, int n,
                   std::vector<std::uint64_t>& scratch) {
  const std::size_t size = std::size_t{1} << n;
  scratch.resize(size);
  scratch[0] = 0;
  int best = INT_MAX;
  for (std::size_t s = 1; s < size; ++s) {
    const std::uint64_t low = s & (~s + 1);
    scratch[s] = scratch[s ^ low] | rows[static_cast<std::size_t>(std::countr_zero(low))];
    const int members = std::popcount(static_cast<std::uint64_t>(s));
    const int cost = (members + 1) / 2 + std::popcount(scratch[s] & ~s) - 1;
    best = std::min(best, cost);
  }
  return best;
}

bool core_dfs(const std::vector<std::uint64_t>& rows, int n, int limit, int depth_left, int start,
              std::uint64_t members, std::uint64_t closed_union) {
  for (int v = start; v < n; ++v) {
    const std::uint64_t m2 = members | (std::uint64_t{1} << v);
    const std::uint64_t u2 = closed_union | rows[static_cast<std::size_t>(v)];
    const int size = std::popcount(m2);
    if ((size + 1) / 2 + std::popcount(u2 & ~m2) - 1 <= limit) return true;
    if (depth_left > 1 && core_dfs(rows, n, limit, depth_left - 1, v + 1, m2, u2)) return true;
  }
  return false;
}

// Whether some nonempty core S achieves ceil(|S|/2) + |N(S)| - 1 <= limit.
// Candidates larger than 2*(limit+1) cannot qualify and are skipped.
bool core_exists_cost_at_most(const std::vector<std::uint64_t>& rows, int n, int limit) {
  if (limit < 0) return false;
  const int cap = std::min(n, 2 * (limit + 1));
  if (cap == 0) return false;
  return core_dfs(rows, n, limit, cap, 0, 0, 0);
}

VertexSet mask_to_set(int n, std::uint64_t mask) { return VertexSet::from_mask(n, mask); }

FaultPair pair_from_masks(int n, std::pair<std::uint64_t, std::uint64_t> masks) {
  return FaultPair{mask_to_set(n, masks.first), mask_to_set(n, masks.second)};
}

// Offsets of the per-cardinality blocks in the rank space of all edge
// subsets of size 0..h, lexicographic within each size.
struct FeRankSpace {
  int edge_count = 0;
  int max_size = 0;
  std::vector<std::uint64_t> block_begin;  // block_begin[s] = rank of first size-s subset
  std::uint64_t total = 0;

  FeRankSpace(int m, int h) : edge_count(m), max_size(h) {
    std::uint64_t offset = 0;
    for (int s = 0; s <= h; ++s) {
      block_begin.push_back(offset);
      offset += binomial(m, s);
    }
    total = offset;
  }

  void unrank(std::uint64_t rank, std::vector<int>& out) const {
    int s = max_size;
    while (s > 0 && rank < block_begin[static_cast<std::size_t>(s)]) --s;
    unrank_combination(rank - block_begin[static_cast<std::size_t>(s)], edge_count, s, out);
  }
};

EdgeSet edge_subset(const std::vector<Edge>& edges, const std::vector<int>& picks) {
  std::vector<Edge> out;
  out.reserve(picks.size());
  for (int i : picks) out.push_back(edges[static_cast<std::size_t>(i)]);
  return EdgeSet(std::move(out));
}

struct ExhaustiveBest {
  int value = INT_MAX;
  std::uint64_t rank = UINT64_MAX;
};

DiagnosabilityReport exhaustive_report(const Graph& g, int h, DiagModel model, int workers) {
  const auto start = Clock::now();
  if (g.vertex_count() > kMaxExactVertices) {
    throw std::invalid_argument(
        "exhaustive strategy refused: graphs above " + std::to_string(kMaxExactVertices) +
        " vertices are out of desk-scale reach; use witness or sampled bounds");
  }
  const WordGraph base = WordGraph::from(g);
  const std::vector<Edge>& edges = g.edges();
  const FeRankSpace ranks(g.edge_count(), h);
  if (ranks.total > kMaxEdgeFaultSets) {
    throw std::invalid_argument("exhaustive strategy refused: too many edge-fault subsets");
  }

  // Per worker: strictly ascending ranks with a monotone cutoff. A fault
  // set is evaluated exactly only when it beats the worker's best so far,
  // which keeps the merged (value, rank) minimum schedule-independent.
  auto step = [&](ExhaustiveBest& best, std::uint64_t rank) {
    thread_local std::vector<int> picks;
    thread_local std::vector<std::uint64_t> core_scratch;
    ranks.unrank(rank, picks);
    WordGraph wg = base;
    for (int i : picks) wg.remove_edge(edges[static_cast<std::size_t>(i)].u,
                                       edges[static_cast<std::size_t>(i)].v);
    int value;
    if (best.value == INT_MAX) {
      value = model == DiagModel::Pmc ? pmc_core_value(wg.rows, wg.n, core_scratch)
                                      : exact_value_by_pairs(wg, model);
    } else {
      const bool can_improve =
          model == DiagModel::Pmc
              ? core_exists_cost_at_most(wg.rows, wg.n, best.value - 1)
              : first_indistinguishable_pair(wg, best.value, model).has_value();
      if (!can_improve) return;
      value = model == DiagModel::Pmc ? pmc_core_value(wg.rows, wg.n, core_scratch)
                                      : exact_value_by_pairs(wg, model);
    }
    if (value < best.value || (value == best.value && rank < best.rank)) {
      best.value = value;
      best.rank = rank;
    }
  };
  auto merge = [](ExhaustiveBest& a, const ExhaustiveBest& b) {
    if (b.value < a.value || (b.value == a.value && b.rank < a.rank)) a = b;
  };
  ExhaustiveBest best = strided_reduce(ranks.total, workers, ExhaustiveBest{}, step, merge);

  DiagnosabilityReport report;
  report.model = model;
  report.h = h;
  report.value = best.value;
  report.lower = best.value;
  report.upper = best.value;
  report.strategy = Strategy::exhaustive().name();

  std::vector<int> picks;
  ranks.unrank(best.rank, picks);
  EdgeSet fe = edge_subset(edges, picks);
  WordGraph damaged = base;
  for (const Edge& e : fe.edges()) damaged.remove_edge(e.u, e.v);
  if (auto masks = first_indistinguishable_pair(damaged, best.value + 1, model)) {
    report.certificate = Certificate{std::move(fe), pair_from_masks(g.vertex_count(), *masks)};
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

DiagnosabilityReport witness_report(const Graph& g, int h, DiagModel model) {
  const auto start = Clock::now();
  // Beyond h = k the k-edge witness already isolates a vertex, so the
  // bound stays 0; clamp rather than reject.
  const int k = g.vertex_count() > 0 ? g.degree(0) : 0;
  UpperBoundWitness w = upper_bound_witness(g, std::min(h, k), model);
  DiagnosabilityReport report;
  report.model = model;
  report.h = h;
  report.lower = 0;
  report.upper = w.bound;
  if (w.bound == 0) report.value = 0;
  report.strategy = Strategy::witness_only().name();
  report.certificate = Certificate{std::move(w.fe), std::move(w.pair)};
  report.elapsed_ms = ms_since(start);
  return report;
}

// Scratch-heavy row predicate used by the sampled prober; avoids
// reallocating sets on every trial.
struct ProbeScratch {
  VertexSet diff, both, tmp;

  explicit ProbeScratch(int n) : diff(n), both(n), tmp(n) {}
};

bool distinguishable_rows_bool(const std::vector<VertexSet>& rows, DiagModel model,
                               const VertexSet& f1, const VertexSet& f2, ProbeScratch& s) {
  const int n = static_cast<int>(rows.size());
  s.diff = f1;
  s.diff ^= f2;
  s.both = f1;
  s.both |= f2;
  if (model == DiagModel::Pmc) {
    for (int u = 0; u < n; ++u) {
      if (!s.both.test(u) && rows[static_cast<std::size_t>(u)].intersects(s.diff)) return true;
    }
    return false;
  }
  for (int x = 0; x < n; ++x) {
    if (s.both.test(x)) continue;
    const VertexSet& nb = rows[static_cast<std::size_t>(x)];
    if (nb.intersects(s.diff)) {
      s.tmp = nb;
      s.tmp -= s.both;
      if (!s.tmp.empty()) return true;
    }
    s.tmp = nb;
    s.tmp &= s.diff;
    s.tmp &= f1;
    if (s.tmp.count() >= 2) return true;
    s.tmp = nb;
    s.tmp &= s.diff;
    s.tmp &= f2;
    if (s.tmp.count() >= 2) return true;
  }
  return false;
}

struct SampleState {
  std::vector<VertexSet> rows;
  ProbeScratch scratch;
  VertexSet f1, f2;
  std::vector<int> fe_picks;
  // Best refutation so far: smallest max(|F1|,|F2|), then earliest trial.
  int refuted_max = INT_MAX;
  std::uint64_t refuted_trial = UINT64_MAX;
  VertexSet refuted_f1, refuted_f2;
  std::vector<int> refuted_fe;

  explicit SampleState(const Graph& g)
      : rows(g.adjacency()),
        scratch(g.vertex_count()),
        f1(g.vertex_count()),
        f2(g.vertex_count()),
        refuted_f1(g.vertex_count()),
        refuted_f2(g.vertex_count()) {}
};

void sample_vertex_set(SplitMix64& rng, int n, int max_size, VertexSet& out) {
  out.clear();
  const int size = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_size) + 1));
  int placed = 0;
  while (placed < size) {
    int v = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
    if (!out.test(v)) {
      out.set(v);
      ++placed;
    }
  }
}

DiagnosabilityReport sampled_report(const Graph& g, int h, DiagModel model,
                                    const Strategy& strategy, int workers) {
  const auto start = Clock::now();
  if (strategy.trials < 1) throw std::invalid_argument("sampled strategy needs trials >= 1");

  StructuralProfile profile = structural_profile(g);
  int upper;
  if (g.vertex_count() == 0) {
    upper = 0;
  } else if (profile.regular_degree.has_value()) {
    const int k = *profile.regular_degree;
    upper = upper_bound_witness(g, std::min(h, k), model).bound;
  } else {
    upper = std::max(g.vertex_count() - 1, 0);
  }

  DiagnosabilityReport report;
  report.model = model;
  report.h = h;
  report.lower = 0;
  report.strategy = strategy.name();

  if (upper == 0) {
    // Zero faults are always diagnosable, so the bounds pinch exactly.
    report.upper = 0;
    report.value = 0;
    report.elapsed_ms = ms_since(start);
    return report;
  }

  const std::vector<Edge>& edges = g.edges();
  const int m = g.edge_count();
  const int n = g.vertex_count();
  const int probe_cap = upper;

  // Each trial draws |Fe| = h edges and a distinct pair with sizes up to
  // the witness bound; a hit refutes the bound, a miss proves nothing.
  auto step = [&](SampleState& state, std::uint64_t trial) {
    SplitMix64 rng(trial_seed(strategy.seed, trial));
    state.fe_picks.clear();
    while (static_cast<int>(state.fe_picks.size()) < h) {
      int e = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m)));
      if (std::find(state.fe_picks.begin(), state.fe_picks.end(), e) == state.fe_picks.end()) {
        state.fe_picks.push_back(e);
      }
    }
    for (int i : state.fe_picks) {
      state.rows[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].u)].reset(
          edges[static_cast<std::size_t>(i)].v);
      state.rows[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].v)].reset(
          edges[static_cast<std::size_t>(i)].u);
    }
    sample_vertex_set(rng, n, probe_cap, state.f1);
    int attempts = 0;
    do {
      sample_vertex_set(rng, n, probe_cap, state.f2);
    } while (state.f2 == state.f1 && ++attempts < 64);
    if (state.f2 != state.f1 &&
        !distinguishable_rows_bool(state.rows, model, state.f1, state.f2, state.scratch)) {
      const int max_size = std::max(state.f1.count(), state.f2.count());
      if (max_size < state.refuted_max ||
          (max_size == state.refuted_max && trial < state.refuted_trial)) {
        state.refuted_max = max_size;
        state.refuted_trial = trial;
        state.refuted_f1 = state.f1;
        state.refuted_f2 = state.f2;
        state.refuted_fe = state.fe_picks;
      }
    }
    for (int i : state.fe_picks) {
      state.rows[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].u)].set(
          edges[static_cast<std::size_t>(i)].v);
      state.rows[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].v)].set(
          edges[static_cast<std::size_t>(i)].u);
    }
  };
  auto merge = [](SampleState& a, const SampleState& b) {
    if (b.refuted_max < a.refuted_max ||
        (b.refuted_max == a.refuted_max && b.refuted_trial < a.refuted_trial)) {
      a.refuted_max = b.refuted_max;
      a.refuted_trial = b.refuted_trial;
      a.refuted_f1 = b.refuted_f1;
      a.refuted_f2 = b.refuted_f2;
      a.refuted_fe = b.refuted_fe;
    }
  };
  SampleState result = strided_reduce(strategy.trials, workers, SampleState(g), step, merge);

  if (result.refuted_trial != UINT64_MAX) {
    // An indistinguishable pair with max size s forces t <= s - 1.
    report.upper = std::min(upper, result.refuted_max - 1);
    report.certificate =
        Certificate{edge_subset(edges, result.refuted_fe),
                    FaultPair{std::move(result.refuted_f1), std::move(result.refuted_f2)}};
  } else {
    report.upper = upper;
  }
  if (report.upper == 0) report.value = 0;
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace

std::string Strategy::name() const {
  switch (kind) {
    case Kind::Exhaustive:
      return "exhaustive";
    case Kind::WitnessOnly:
      return "witness";
    case Kind::Sampled:
      return "sampled(trials=" + std::to_string(trials) + ",seed=" + std::to_string(seed) + ")";
  }
  return "unknown";
}

std::string TopologySource::label() const {
  if (kind) return topology_name(*kind);
  if (path) return "file:" + *path;
  return "graph";
}

TDiagnosable is_t_diagnosable(const Graph& g, int t, DiagModel model) {
  if (t < 0) throw std::invalid_argument("is_t_diagnosable: t must be non-negative");
  const WordGraph wg = WordGraph::from(g);
  auto masks = first_indistinguishable_pair(wg, t, model);
  if (!masks) return TDiagnosable{true, std::nullopt};
  return TDiagnosable{false, pair_from_masks(g.vertex_count(), *masks)};
}

int diagnosability(const Graph& g, DiagModel model) {
  if (g.vertex_count() == 0) return 0;
  return exact_value_by_pairs(WordGraph::from(g), model);
}

int pmc_diagnosability_by_core(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("pmc_diagnosability_by_core: empty graph");
  if (g.vertex_count() > kMaxExactVertices) {
    throw std::invalid_argument("pmc_diagnosability_by_core: graph too large for a full core scan");
  }
  const WordGraph wg = WordGraph::from(g);
  std::vector<std::uint64_t> scratch;
  return pmc_core_value(wg.rows, wg.n, scratch);
}

DiagnosabilityReport edge_tolerable_diagnosability(const Graph& g, int h, DiagModel model,
                                                   const Strategy& strategy, int workers) {
  if (h < 0 || h > g.edge_count()) {
    throw std::invalid_argument("edge_tolerable_diagnosability: h out of range 0..|E|");
  }
  if (workers < 1) workers = 1;
  switch (strategy.kind) {
    case Strategy::Kind::Exhaustive:
      return exhaustive_report(g, h, model, workers);
    case Strategy::Kind::WitnessOnly:
      return witness_report(g, h, model);
    case Strategy::Kind::Sampled:
      return sampled_report(g, h, model, strategy, workers);
  }
  throw std::logic_error("edge_tolerable_diagnosability: unknown strategy");
}

UpperBoundWitness upper_bound_witness(const Graph& g, int h, DiagModel model) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("upper_bound_witness: empty graph");
  const int k = g.degree(0);
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) != k) throw std::invalid_argument("upper_bound_witness: graph is not regular");
  }
  if (h < 0 || h > k) throw std::invalid_argument("upper_bound_witness: h out of range 0..k");

  const int u = 0;
  std::vector<Edge> cut;
  const VertexSet& nb = g.neighbors(u);
  for (int v = nb.first(); v >= 0 && static_cast<int>(cut.size()) < h; v = nb.next(v)) {
    cut.push_back(Edge::normalized(u, v));
  }
  EdgeSet fe{std::move(cut)};
  Graph damaged = g.delete_edges(fe);

  FaultPair pair;
  pair.f1 = damaged.neighbors(u);
  pair.f2 = pair.f1;
  pair.f2.set(u);
  if (distinguishable(damaged, model, pair.f1, pair.f2).has_value()) {
    throw std::logic_error("upper_bound_witness: constructed pair failed validation");
  }
  return UpperBoundWitness{std::move(fe), std::move(pair), k - h};
}

int expected_bh_value(int n, int h, DiagModel model) {
  if (n < 1 || h < 0 || h > 2 * n) throw std::invalid_argument("expected_bh_value: out of range");
  if (n == 1) {
    if (model == DiagModel::MmStar) return 0;
    return h <= 1 ? 1 : 0;
  }
  return 2 * n - h;
}

namespace {

VerifyCell make_cell(const std::string& topology, DiagModel model, int n, int h, int expected,
                     const DiagnosabilityReport& rep) {
  VerifyCell cell;
  cell.topology = topology;
  cell.model = model;
  cell.n = n;
  cell.h = h;
  cell.expected = expected;
  cell.value = rep.value;
  cell.lower = rep.lower;
  cell.upper = rep.upper;
  cell.strategy = rep.strategy;
  cell.elapsed_ms = rep.elapsed_ms;
  if (rep.value.has_value()) {
    cell.verdict = *rep.value == expected ? "PASS" : "FAIL";
  } else if (rep.lower <= expected && expected <= rep.upper) {
    cell.verdict = "CONSISTENT";
  } else {
    cell.verdict = "FAIL";
  }
  return cell;
}

}  // namespace

std::vector<VerifyCell> verify_bh_values(const VerifyOptions& opts) {
  if (opts.max_n < 1) throw std::invalid_argument("verify_bh_values: max_n must be >= 1");
  std::vector<VerifyCell> cells;
  for (int n = 1; n <= opts.max_n; ++n) {
    const Graph g = balanced_hypercube(n);
    const std::string name = topology_name(TopologyKind::balanced_hypercube(n));
    for (DiagModel model : opts.models) {
      for (int h = 0; h <= 2 * n; ++h) {
        const Strategy strategy = n <= opts.exhaustive_max_n
                                      ? Strategy::exhaustive()
                                      : Strategy::sampled(opts.trials, opts.seed);
        DiagnosabilityReport rep =
            edge_tolerable_diagnosability(g, h, model, strategy, opts.workers);
        cells.push_back(make_cell(name, model, n, h, expected_bh_value(n, h, model), rep));
      }
    }
  }
  return cells;
}

std::vector<VerifyCell> verify_reference_instances(int workers) {
  std::vector<VerifyCell> cells;
  const auto run = [&](const Graph& g, const TopologyKind& kind, DiagModel model, int h,
                       int expected) {
    DiagnosabilityReport rep =
        edge_tolerable_diagnosability(g, h, model, Strategy::exhaustive(), workers);
    cells.push_back(make_cell(topology_name(kind), model, kind.param, h, expected, rep));
  };

  const Graph q3 = hypercube_graph(3);
  for (int h = 0; h <= 3; ++h) {
    run(q3, TopologyKind::hypercube(3), DiagModel::Pmc, h, 3 - h);
  }
  const Graph g8 = g8_graph();
  const Graph c3 = crown_graph(3);
  for (int h = 0; h <= 3; ++h) {
    const int expected = h == 0 ? 2 : 3 - h;
    run(g8, TopologyKind::g8(), DiagModel::MmStar, h, expected);
    run(c3, TopologyKind::crown(3), DiagModel::MmStar, h, expected);
  }
  return cells;
}

}  // namespace netdiag
