#include <algorithm>
#include <cstdio>
#include <sstream>

#include "cec/error.hpp"
#include "cec/pipeline.hpp"

namespace cec {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

class Run {
 public:
  Run(const Graph& g, const Params& p) : g_(g), p_(p), budget_{p.budget} {
    report_.params = p;
  }

  const Graph& g() const { return g_; }
  const Params& params() const { return p_; }
  SearchBudget& budget() { return budget_; }
  bool done() const { return report_.success; }

  void log(std::string name, std::string detail, bool ok) {
    report_.stages.push_back({std::move(name), std::move(detail), ok});
  }

  /// Records the family if it verifies as k disjoint consecutive even cycles.
  bool accept(const std::string& stage, CycleFamily f, const std::string& detail) {
    f = make_family(std::move(f.cycles), true);
    Verdict v = f.k() == p_.k ? verify_certificate(g_, f) : Verdict::fail("expected " + std::to_string(p_.k) + " cycles");
    if (!v) {
      log(stage, detail + "; rejected: " + v.reason, false);
      return false;
    }
    log(stage, detail, true);
    report_.success = true;
    report_.family = std::move(f);
    return true;
  }

  SearchReport finish(bool budget_hit) {
    report_.budget_exhausted = !report_.success && (budget_hit || budget_.exhausted);
    return std::move(report_);
  }

  /// The lengths of {4, ..., 2k+2} missing from `have`, greedily found on the
  /// max-cut bipartization avoiding the given cycles.
  std::optional<CycleFamily> complete(const std::vector<Cycle>& have) {
    std::vector<int> need;
    for (int len = 2 * p_.k + 2; len >= 4; len -= 2) {
      bool present = false;
      for (const auto& c : have) present |= c.length() == len;
      if (!present) need.push_back(len);
    }
    std::vector<Cycle> all = have;
    if (!need.empty()) {
      VertexMask used(static_cast<std::size_t>(g_.vertex_count()), 0);
      for (const auto& c : have)
        for (Vertex v : c.vertices) used[v] = 1;
      auto more = greedy_disjoint_bipartite_cycles(bipartization().bipartite, bipartization().side,
                                                   need, used, budget_);
      all.insert(all.end(), more.begin(), more.end());
    }
    if (static_cast<int>(all.size()) != p_.k) return std::nullopt;
    return make_family(std::move(all), true);
  }

  const Bipartization& bipartization() {
    if (!bip_) bip_ = max_cut_bipartition(g_);
    return *bip_;
  }

 private:
  const Graph& g_;
  Params p_;
  SearchBudget budget_;
  SearchReport report_;
  std::optional<Bipartization> bip_;
};

std::string join_lengths(const std::vector<Cycle>& cs) {
  std::string s = "[";
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "," : "") + std::to_string(cs[i].length());
  return s + "]";
}

Graph cross_graph(const Graph& g, const VertexMask& in_v1) {
  return edge_subgraph(g, [&](Vertex a, Vertex b) { return in_v1[a] != in_v1[b]; });
}

std::optional<KssCert> try_kss(const Graph& bip, const VertexMask& side, int s) {
  try {
    return find_kss(bip, side, s, {1.0, 2'000'000});
  } catch (const Error& e) {
    if (e.code() != Errc::NotHypothesis && e.code() != Errc::ContractViolation) throw;
  }
  return std::nullopt;
}

// Stages 1 and 2, shared by both orchestrators.
Partition deletion_and_partition(Run& run, bool& budget_hit) {
  const auto& p = run.params();
  DeletionOutcome del = iterative_deletion(run.g(), p, run.budget());
  budget_hit |= del.trace.budget_hit;
  std::string detail = "records=" + std::to_string(del.trace.records.size()) + " r=[";
  for (std::size_t i = 0; i < del.trace.records.size(); ++i)
    detail += (i ? "," : "") + std::to_string(del.trace.records[i].r);
  detail += "] terminal=" + std::to_string(del.trace.terminal_vertices.size()) +
            " depth=" + std::to_string(p.depth_for(run.g().vertex_count()));
  if (del.trace.budget_hit) detail += " budget-hit";
  if (del.family) {
    run.accept("deletion", *del.family, detail + " via " + del.how);
  } else {
    run.log("deletion", detail, false);
  }
  Partition part = partition_vertices(run.g(), del.trace, p);
  std::ostringstream os;
  os << "|V1|=" << part.v1.size() << " |V2|=" << part.v2.size() << " |U|=" << part.u_set.size()
     << " m=" << part.m << " e(V1)=" << part.e_v1 << " e(V1,V2)=" << part.e_v1_v2
     << " e(V2)=" << part.e_v2 << " cap=" << fmt(part.degree_cap)
     << " heavy>" << fmt(part.heavy_cut)
     << " dense-V1=" << (part.e_v1 > part.dense_v1_threshold ? "yes" : "no")
     << " cross-heavy=" << (part.e_v1_v2 > part.cross_threshold ? "yes" : "no")
     << " eps'=" << fmt(part.bookkeeping_eps);
  run.log("partition", os.str(), true);
  return part;
}

void kss_stage(Run& run, const Partition& part) {
  const int s = run.params().s();
  VertexMask in_v1 = make_mask(run.g().vertex_count(), part.v1);
  if (auto cert = try_kss(cross_graph(run.g(), in_v1), in_v1, s)) {
    if (run.accept("kss", carve_from_kss(*cert, run.params().k), "K_{s,s} in G(V1,V2), s=" + std::to_string(s)))
      return;
  }
  const Bipartization& bip = run.bipartization();
  if (auto cert = try_kss(bip.bipartite, bip.side, s)) {
    run.accept("kss", carve_from_kss(*cert, run.params().k), "K_{s,s} in max-cut bipartization, s=" + std::to_string(s));
    return;
  }
  run.log("kss", "no K_{s,s}, s=" + std::to_string(s), false);
}

void common_neighbor_stage(Run& run, const Partition& part) {
  CycleSchedule sched = make_schedule(run.params().k, part.m);
  PartialFamily pf = common_neighbor_cycles(run.g(), part, sched, run.params());
  std::string detail = "ell=" + std::to_string(sched.ell) + " built=" + join_lengths(pf.cycles);
  if (pf.stuck_index >= 0) detail += " stuck at " + std::to_string(pf.stuck_index) + ": " + pf.reason;
  if (pf.cycles.empty()) {
    run.log("common-neighbor", detail, false);
    return;
  }
  if (auto f = run.complete(pf.cycles)) {
    if (run.accept("common-neighbor", *f, detail)) return;
  }
  run.log("common-neighbor", detail + " completion failed", false);
}

void anchored_stage(Run& run, const Partition& part) {
  PartialFamily pf = anchored_long_cycles(run.g(), part, run.params());
  std::string detail = "built=" + join_lengths(pf.cycles);
  if (pf.stuck_index >= 0) detail += " stuck at " + std::to_string(pf.stuck_index) + ": " + pf.reason;
  if (pf.cycles.empty()) {
    run.log("anchored-long", detail, false);
    return;
  }
  if (auto f = run.complete(pf.cycles)) {
    if (run.accept("anchored-long", *f, detail)) return;
  }
  run.log("anchored-long", detail + " completion failed", false);
}

void type_chain_stage(Run& run, const Partition& part) {
  try {
    TypeChainResult tc = type_chain_cycle(run.g(), part, run.params());
    std::string detail = "length=" + std::to_string(tc.cycle.length()) +
                         " typeI=" + std::to_string(tc.chain.r_alpha) +
                         " typeII=" + std::to_string(tc.chain.s_alpha) +
                         " anchors=" + std::to_string(tc.chain.beta) +
                         " closing=" + std::to_string(tc.chain.closing.length());
    if (auto f = run.complete({tc.cycle})) {
      if (run.accept("type-chain", *f, detail)) return;
    }
    run.log("type-chain", detail + " completion failed", false);
  } catch (const Error& e) {
    if (e.code() != Errc::NotHypothesis && e.code() != Errc::ClassificationFailed &&
        e.code() != Errc::GreedyStuck)
      throw;
    run.log("type-chain", e.what(), false);
  }
}

void greedy_stage(Run& run) {
  const int k = run.params().k;
  const int n = run.g().vertex_count();
  const int t = run.params().depth_for(n);
  const Bipartization& bip = run.bipartization();
  for (int r = 2; r <= t && 2 * r * k + k * (k - 1) <= n && !run.budget().exhausted; ++r) {
    std::vector<int> lengths;
    for (int j = k - 1; j >= 0; --j) lengths.push_back(2 * r + 2 * j);
    auto cs = greedy_disjoint_bipartite_cycles(bip.bipartite, bip.side, lengths, {}, run.budget());
    if (static_cast<int>(cs.size()) == k &&
        run.accept("greedy", make_family(std::move(cs), true), "bipartization, r=" + std::to_string(r)))
      return;
  }
  run.log("greedy", "no disjoint family on the bipartization", false);
}

/// A cycle of length 4 disjoint from `avoid`: K_{2,2} across V1/V2 first, then anywhere.
std::optional<Cycle> residual_c4(Run& run, const VertexMask& in_v1, const Cycle& avoid) {
  VertexMask keep(static_cast<std::size_t>(run.g().vertex_count()), 1);
  for (Vertex v : avoid.vertices) keep[v] = 0;
  Subgraph rest = induced_subgraph(cross_graph(run.g(), in_v1), keep);
  VertexMask side(static_cast<std::size_t>(rest.graph.vertex_count()), 0);
  for (Vertex v = 0; v < rest.graph.vertex_count(); ++v) side[v] = in_v1[rest.origin[v]];
  if (auto cert = try_kss(rest.graph, side, 2))
    return Cycle{{rest.origin[cert->side_a[0]], rest.origin[cert->side_b[0]],
                  rest.origin[cert->side_a[1]], rest.origin[cert->side_b[1]]}};
  SearchBudget sb{std::min<std::int64_t>(run.params().per_search_budget,
                                         std::max<std::int64_t>(0, run.budget().limit - run.budget().used))};
  auto c = find_cycle_of_length(run.g(), 4, keep, sb);
  run.budget().used += sb.used;
  if (run.budget().used >= run.budget().limit) run.budget().exhausted = true;
  return c;
}

void k33_stage(Run& run, const Partition& part) {
  VertexMask in_v1 = make_mask(run.g().vertex_count(), part.v1);
  auto cert = try_kss(cross_graph(run.g(), in_v1), in_v1, 3);
  if (!cert) {
    run.log("k33", "no K_{3,3} in G(V1,V2)", false);
    return;
  }
  Cycle c6;
  for (int i = 0; i < 3; ++i) {
    c6.vertices.push_back(cert->side_a[i]);
    c6.vertices.push_back(cert->side_b[i]);
  }
  auto c4 = residual_c4(run, in_v1, c6);
  if (c4 && run.accept("k33", make_family({*c4, c6}, true), "C6 from K_{3,3}, C4 in the rest")) return;
  run.log("k33", "K_{3,3} found but no disjoint C4", false);
}

void pivot_stage(Run& run, const Partition& part) {
  const Graph& g = run.g();
  const int n = g.vertex_count();
  VertexMask in_v1 = make_mask(n, part.v1);
  Vertex u = -1;
  int best = -1;
  for (Vertex v : part.v2) {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += in_v1[w];
    if (d > best) best = d, u = v;
  }
  if (u < 0 || best < 2) {
    run.log("pivot-c6", "no pivot with two V1 neighbours", false);
    return;
  }
  VertexMask in_a(static_cast<std::size_t>(n), 0);
  for (Vertex w : g.neighbors(u))
    if (in_v1[w]) in_a[w] = 1;
  std::optional<Cycle> c6;
  std::string route;
  {
    SearchBudget sb{std::min<std::int64_t>(run.params().per_search_budget,
                                           std::max<std::int64_t>(0, run.budget().limit - run.budget().used))};
    if (auto p = find_path_on(g, 5, in_a, sb)) {
      c6 = Cycle{p->vertices};
      c6->vertices.push_back(u);
      route = "5-vertex path in G[A]";
    }
    run.budget().used += sb.used;
  }
  if (!c6) {
    Graph ab = edge_subgraph(g, [&](Vertex x, Vertex y) {
      return in_v1[x] && in_v1[y] && in_a[x] != in_a[y];
    });
    Subgraph h = induced_subgraph(ab, in_v1);
    VertexMask local_a(static_cast<std::size_t>(h.graph.vertex_count()), 0);
    for (Vertex v = 0; v < h.graph.vertex_count(); ++v) local_a[v] = in_a[h.origin[v]];
    try {
      Cycle c = long_cycle(h.graph, 6, {2'000'000, 20});
      PathCert p = even_endpoints_path(h.graph, c, local_a, 4);
      c6 = Cycle{h.to_parent(p.vertices)};
      c6->vertices.push_back(u);
      route = "even cycle in G(A,B)";
    } catch (const Error& e) {
      if (e.code() != Errc::BelowThreshold && e.code() != Errc::InfeasibleTrim &&
          e.code() != Errc::ContractViolation)
        throw;
    }
  }
  if (!c6) {
    run.log("pivot-c6", "pivot " + std::to_string(u) + ": no C6 through it", false);
    return;
  }
  auto c4 = residual_c4(run, in_v1, *c6);
  std::string detail = "pivot " + std::to_string(u) + ", C6 via " + route;
  if (c4 && run.accept("pivot-c6", make_family({*c4, *c6}, true), detail)) return;
  run.log("pivot-c6", detail + ", no disjoint C4", false);
}

}  // namespace

SearchReport run_pipeline(const Graph& g, const Params& params) {
  params.validate();
  if (params.mode == Mode::K2) return k2_pipeline(g, params);
  Run run(g, params);
  bool budget_hit = false;
  Partition part = deletion_and_partition(run, budget_hit);
  if (!run.done()) kss_stage(run, part);
  if (params.mode == Mode::Exact) {
    if (!run.done()) common_neighbor_stage(run, part);
    if (!run.done()) anchored_stage(run, part);
    if (!run.done()) type_chain_stage(run, part);
  } else {
    if (!run.done()) type_chain_stage(run, part);
    if (!run.done()) common_neighbor_stage(run, part);
    if (!run.done()) anchored_stage(run, part);
  }
  if (!run.done()) greedy_stage(run);
  return run.finish(budget_hit);
}

SearchReport k2_pipeline(const Graph& g, const Params& params) {
  params.validate();
  if (params.k != 2) throw Error(Errc::InvalidInput, "k2 pipeline requires k = 2");
  Run run(g, params);
  bool budget_hit = false;
  Partition part = deletion_and_partition(run, budget_hit);
  if (!run.done()) k33_stage(run, part);
  if (!run.done()) pivot_stage(run, part);
  if (!run.done()) kss_stage(run, part);
  if (!run.done()) greedy_stage(run);
  return run.finish(budget_hit);
}

}  // namespace cec
