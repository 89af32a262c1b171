#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "cec/error.hpp"
#include "cec/pipeline.hpp"

namespace cec {

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::Exact: return "exact";
    case Mode::Asymptotic: return "asymptotic";
    case Mode::K2: return "k2";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "exact") return Mode::Exact;
  if (s == "asymptotic") return Mode::Asymptotic;
  if (s == "k2") return Mode::K2;
  return std::nullopt;
}

double Params::heavy_fraction() const {
  if (heavy_threshold) return *heavy_threshold;
  if (mode == Mode::Asymptotic) return 1.0 - 1.0 / (k * std::sqrt(static_cast<double>(k)));
  return 1.0 - eps / k;
}

double Params::degree_cap(int n) const {
  if (n < 2) return 1.0;
  const double divisor = degree_cap_divisor ? *degree_cap_divisor : std::log2(static_cast<double>(n));
  return std::max(1.0, n / divisor);
}

int Params::depth_for(int n) const {
  if (depth_budget) return *depth_budget;
  if (n < 2) return 2;
  return static_cast<int>(std::floor(std::log(static_cast<double>(n)) / std::log1p(1.0 / (4 * k)))) + 1;
}

void Params::validate() const {
  if (k < 2) throw Error(Errc::InvalidInput, "k must be at least 2");
  if (!(eps > 0)) throw Error(Errc::InvalidInput, "eps must be positive");
  if (mode == Mode::K2 && k != 2) throw Error(Errc::InvalidInput, "mode k2 requires k = 2");
  if (budget <= 0 || per_search_budget <= 0) throw Error(Errc::InvalidInput, "budget must be positive");
  const double h = heavy_fraction();
  if (!(h > 0 && h < 1)) throw Error(Errc::InvalidInput, "heavy threshold must lie in (0,1)");
  if (degree_cap_divisor && !(*degree_cap_divisor > 0))
    throw Error(Errc::InvalidInput, "degree cap divisor must be positive");
}

// ---------------------------------------------------------------------------

namespace {

SearchBudget slice(const SearchBudget& total, std::int64_t cap) {
  return SearchBudget{std::max<std::int64_t>(0, std::min(cap, total.limit - total.used))};
}

void absorb(SearchBudget& total, const SearchBudget& part) {
  total.used += part.used;
  if (total.used >= total.limit) total.exhausted = true;
}

// k cycles of lengths 2r..2r+2k-2, each first searched away from the cycles already chosen.
std::optional<CycleFamily> family_at(const Graph& h, int r, int k, const Params& params,
                                     SearchBudget& budget, bool& budget_hit) {
  std::vector<Cycle> cycles;
  VertexMask free(static_cast<std::size_t>(h.vertex_count()), 1);
  int free_count = h.vertex_count();
  for (int j = 0; j < k; ++j) {
    const int len = 2 * r + 2 * j;
    std::optional<Cycle> c;
    if (free_count >= len) {
      SearchBudget sb = slice(budget, params.per_search_budget);
      c = find_cycle_of_length(h, len, free, sb);
      budget_hit |= sb.exhausted;
      absorb(budget, sb);
    }
    if (!c && j > 0) {
      SearchBudget sb = slice(budget, params.per_search_budget);
      c = find_cycle_of_length(h, len, {}, sb);
      budget_hit |= sb.exhausted;
      absorb(budget, sb);
    }
    if (!c) return std::nullopt;
    for (Vertex v : c->vertices)
      if (free[v]) free[v] = 0, --free_count;
    cycles.push_back(std::move(*c));
  }
  CycleFamily f = make_family(std::move(cycles), false);
  f.disjoint = pairwise_disjoint(f.cycles);
  return f;
}

}  // namespace

std::optional<CycleFamily> assemble_repeated_r(const DeletionTrace& trace, int k) {
  std::map<int, std::vector<const DeletionRecord*>> by_r;
  for (const auto& rec : trace.records) {
    auto& same = by_r[rec.r];
    same.push_back(&rec);
    if (static_cast<int>(same.size()) < k) continue;
    std::vector<Cycle> cycles;
    for (int j = 0; j < k; ++j) cycles.push_back(same[j]->family.cycles.at(j));
    return make_family(std::move(cycles), true);
  }
  return std::nullopt;
}

DeletionOutcome iterative_deletion(const Graph& g, const Params& params, SearchBudget& budget) {
  const int n = g.vertex_count();
  const int k = params.k;
  const int t = params.depth_for(n);
  DeletionOutcome out;
  VertexMask alive(static_cast<std::size_t>(n), 1);
  while (!budget.exhausted) {
    Subgraph cur = induced_subgraph(g, alive);
    std::optional<CycleFamily> fam;
    int r_found = 0;
    for (int r = 2; r <= t && 2 * r + 2 * k - 2 <= cur.graph.vertex_count() && !budget.exhausted; ++r) {
      fam = family_at(cur.graph, r, k, params, budget, out.trace.budget_hit);
      if (fam) {
        r_found = r;
        break;
      }
    }
    if (!fam) break;
    DeletionRecord rec;
    rec.r = r_found;
    for (auto& c : fam->cycles) c.vertices = cur.to_parent(c.vertices);
    rec.family = *fam;
    for (const auto& c : rec.family.cycles) rec.removed.insert(rec.removed.end(), c.vertices.begin(), c.vertices.end());
    std::sort(rec.removed.begin(), rec.removed.end());
    rec.removed.erase(std::unique(rec.removed.begin(), rec.removed.end()), rec.removed.end());
    for (Vertex v : rec.removed) alive[v] = 0;
    out.trace.records.push_back(rec);
    if (rec.family.disjoint) {
      out.family = rec.family;
      out.how = "direct";
      break;
    }
    if (auto f = assemble_repeated_r(out.trace, k)) {
      out.family = std::move(f);
      out.how = "repeated-r";
      break;
    }
  }
  out.trace.terminal_vertices = mask_to_list(alive);
  return out;
}

Partition partition_vertices(const Graph& g, const DeletionTrace& trace, const Params& params) {
  const int n = g.vertex_count();
  Partition p;
  p.v1_prime = trace.terminal_vertices;
  VertexMask in_v1p = make_mask(n, p.v1_prime);
  for (Vertex v = 0; v < n; ++v)
    if (!in_v1p[v]) p.v2_prime.push_back(v);
  p.degree_cap = params.degree_cap(n);
  VertexMask in_v1(static_cast<std::size_t>(n), 0);
  for (Vertex v : p.v1_prime) {
    if (g.degree(v) >= p.degree_cap) p.u_set.push_back(v);
    else p.v1.push_back(v), in_v1[v] = 1;
  }
  std::set_union(p.v2_prime.begin(), p.v2_prime.end(), p.u_set.begin(), p.u_set.end(),
                 std::back_inserter(p.v2));
  p.heavy_cut = params.heavy_fraction() * n;
  for (Vertex v : p.v2) {
    int inside = 0;
    for (Vertex w : g.neighbors(v)) inside += in_v1[w];
    if (inside > p.heavy_cut) p.m_set.push_back(v);
  }
  p.m = static_cast<int>(p.m_set.size());
  VertexMask in_v2(static_cast<std::size_t>(n), 0);
  for (Vertex v : p.v2) in_v2[v] = 1;
  p.e_v1 = edges_within(g, in_v1);
  p.e_v2 = edges_within(g, in_v2);
  p.e_v1_v2 = edges_between(g, in_v1, in_v2);
  p.dense_v1_threshold = 7.0 * n / 8.0;
  p.cross_threshold = (2.0 * params.k + 1) * n;
  if (n > 0)
    p.bookkeeping_eps = (static_cast<double>(p.e_v1) / n - 5.0 / 8.0) * params.k / (8.0 * params.k + 2);
  return p;
}

CycleFamily carve_from_kss(const KssCert& cert, int k) {
  const int need = (k * k + 3 * k) / 2;
  if (cert.s < need || static_cast<int>(cert.side_a.size()) < need ||
      static_cast<int>(cert.side_b.size()) < need)
    throw Error(Errc::InsufficientS, "K_{s,s} with s=" + std::to_string(cert.s) + " cannot carve k=" +
                                         std::to_string(k) + " cycles (needs s >= " +
                                         std::to_string(need) + ")");
  std::vector<Cycle> cycles;
  int offset = 0;
  for (int j = 1; j <= k; ++j) {
    Cycle c;
    for (int i = 0; i <= j; ++i) {
      c.vertices.push_back(cert.side_a[offset + i]);
      c.vertices.push_back(cert.side_b[offset + i]);
    }
    offset += j + 1;
    cycles.push_back(std::move(c));
  }
  if (offset != need) throw Error(Errc::ContractViolation, "carving did not consume exactly s per side");
  return make_family(std::move(cycles), true);
}

CycleSchedule make_schedule(int k, int m) {
  CycleSchedule s;
  int used = 0;
  bool open = true;
  for (int i = 1; i <= k; ++i) {
    const int c = k + 2 - i;
    s.half_lengths.push_back(c);
    if (open && used + (c + 1) / 2 <= m) {
      used += (c + 1) / 2;
      s.ell = i;
    } else {
      open = false;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

/// Path from `from` to `to` whose interior has `pattern.size()` vertices, the
/// i-th interior vertex unused and accepted by pattern[i]. Marks the interior used.
std::optional<VertexList> find_link(const Graph& g, Vertex from, Vertex to,
                                    const std::vector<std::function<bool(Vertex)>>& pattern,
                                    VertexMask& used, std::int64_t node_cap = 2'000'000) {
  VertexList path{from};
  std::int64_t nodes = 0;
  const std::size_t depth = pattern.size();
  auto dfs = [&](auto&& self, Vertex v) -> bool {
    if (++nodes > node_cap) return false;
    const std::size_t placed = path.size() - 1;
    if (placed == depth) return g.has_edge(v, to);
    for (Vertex w : g.neighbors(v)) {
      if (used[w] || w == to || w == from || !pattern[placed](w)) continue;
      used[w] = 1;
      path.push_back(w);
      if (self(self, w)) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  if (!dfs(dfs, from)) return std::nullopt;
  path.push_back(to);
  return path;
}

VertexList anchors_by_weight(const Graph& g, const Partition& part) {
  VertexMask in_v1 = make_mask(g.vertex_count(), part.v1);
  VertexList out = part.m_set;
  std::vector<int> weight(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : out)
    for (Vertex w : g.neighbors(v)) weight[v] += in_v1[w];
  std::stable_sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return weight[a] > weight[b]; });
  return out;
}

}  // namespace

PartialFamily common_neighbor_cycles(const Graph& g, const Partition& part,
                                     const CycleSchedule& sched, const Params&) {
  PartialFamily out;
  const int n = g.vertex_count();
  VertexMask in_v1 = make_mask(n, part.v1);
  VertexMask used(static_cast<std::size_t>(n), 0);
  auto in_v1_fn = [&](Vertex w) { return in_v1[w] != 0; };
  VertexList anchors = anchors_by_weight(g, part);
  if (sched.ell == 0) {
    out.stuck_index = 0;
    out.reason = "heavy set too small for the first cycle";
    return out;
  }
  std::size_t next_anchor = 0;
  for (int i = 0; i < sched.ell; ++i) {
    const int c = sched.half_lengths[i];
    const int q = (c + 1) / 2;
    if (next_anchor + q > anchors.size()) {
      out.stuck_index = i;
      out.reason = "ran out of heavy anchors";
      return out;
    }
    VertexList vs(anchors.begin() + static_cast<std::ptrdiff_t>(next_anchor),
                  anchors.begin() + static_cast<std::ptrdiff_t>(next_anchor + q));
    next_anchor += q;
    VertexMask trial = used;
    for (Vertex v : vs) trial[v] = 1;
    Cycle cyc;
    bool ok = true;
    for (int j = 0; j < q && ok; ++j) {
      const Vertex a = vs[j], b = vs[(j + 1) % q];
      // An odd half-length takes one short link, placed last.
      const bool short_link = (c % 2 == 1) && j == q - 1;
      std::vector<std::function<bool(Vertex)>> pattern(short_link ? 1 : 3, in_v1_fn);
      trial[a] = 0, trial[b] = 0;
      auto link = find_link(g, a, b, pattern, trial);
      trial[a] = 1, trial[b] = 1;
      if (!link) {
        ok = false;
        out.stuck_index = i;
        out.reason = "no V1 link between anchors " + std::to_string(a) + " and " + std::to_string(b);
        break;
      }
      cyc.vertices.insert(cyc.vertices.end(), link->begin(), link->end() - 1);
    }
    if (!ok) return out;
    used = trial;
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

PartialFamily anchored_long_cycles(const Graph& g, const Partition& part, const Params& params) {
  PartialFamily out;
  const int n = g.vertex_count();
  const int k = params.k;
  VertexMask in_v1 = make_mask(n, part.v1);
  VertexMask used(static_cast<std::size_t>(n), 0);
  int target = 2 * k + 2;
  for (Vertex u : anchors_by_weight(g, part)) {
    if (target < 4) break;
    VertexMask in_a(static_cast<std::size_t>(n), 0), pool(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) pool[v] = in_v1[v] && !used[v];
    for (Vertex w : g.neighbors(u))
      if (pool[w]) in_a[w] = 1;
    Graph ab = edge_subgraph(g, [&](Vertex x, Vertex y) {
      return pool[x] && pool[y] && (in_a[x] || in_a[y]);
    });
    Subgraph h = induced_subgraph(ab, pool);
    VertexMask local_a(static_cast<std::size_t>(h.graph.vertex_count()), 0);
    for (Vertex v = 0; v < h.graph.vertex_count(); ++v) local_a[v] = in_a[h.origin[v]];
    std::string failed;
    try {
      Cycle c = long_cycle(h.graph, target, {2'000'000, 20});
      PathCert p = even_endpoints_path(h.graph, c, local_a, target - 2);
      Cycle built{h.to_parent(p.vertices)};
      built.vertices.push_back(u);
      for (Vertex v : built.vertices) used[v] = 1;
      out.cycles.push_back(std::move(built));
      target -= 2;
      continue;
    } catch (const Error& e) {
      if (e.code() != Errc::BelowThreshold && e.code() != Errc::InfeasibleTrim &&
          e.code() != Errc::ContractViolation)
        throw;
      failed = std::string(errc_name(e.code())) + " in " +
               (e.code() == Errc::BelowThreshold ? "long_cycle" : "even_endpoints_path");
    }
    if (out.stuck_index < 0) {
      out.stuck_index = static_cast<int>(out.cycles.size());
      out.reason = "anchor " + std::to_string(u) + ": " + failed;
    }
  }
  if (out.stuck_index < 0 && target >= 4) {
    out.stuck_index = static_cast<int>(out.cycles.size());
    out.reason = "ran out of heavy anchors";
  }
  return out;
}

TypeChainResult type_chain_cycle(const Graph& g, const Partition& part, const Params& params) {
  const int n = g.vertex_count();
  const int k = params.k;
  const int ell = (2 * k + 2) / 3 + 2;
  VertexList anchors = anchors_by_weight(g, part);
  if (static_cast<int>(anchors.size()) < ell)
    throw Error(Errc::NotHypothesis, "heavy set has " + std::to_string(anchors.size()) +
                                         " vertices, the chain needs " + std::to_string(ell));
  anchors.resize(static_cast<std::size_t>(ell));
  VertexMask in_v1 = make_mask(n, part.v1);
  VertexMask used(static_cast<std::size_t>(n), 0);
  for (Vertex v : anchors) used[v] = 1;
  const double slack = params.eps * n / 10.0;

  TypeChainResult res;
  TypeChain& ch = res.chain;
  int length = 0;
  ch.anchors.push_back(anchors[0]);
  for (int j = 0; j + 1 < ell; ++j) {
    const Vertex a = anchors[j], b = anchors[j + 1];
    VertexMask in_common(static_cast<std::size_t>(n), 0), in_rest(static_cast<std::size_t>(n), 0);
    for (Vertex v : part.v1) in_rest[v] = 1;
    for (Vertex w : g.neighbors(a))
      if (in_v1[w] && g.has_edge(w, b)) in_common[w] = 1, in_rest[w] = 0;
    std::int64_t rest_size = 0;
    for (Vertex v : part.v1) rest_size += in_rest[v];
    PairType type;
    if (edges_within(g, in_common) >= slack) {
      type = PairType::TypeI;
    } else if (edges_between(g, in_common, in_rest) >= rest_size + slack) {
      type = PairType::TypeII;
    } else {
      throw Error(Errc::ClassificationFailed,
                  "anchor pair " + std::to_string(a) + "," + std::to_string(b) + " is neither type");
    }
    auto common = [&](Vertex w) { return in_common[w] != 0; };
    auto rest = [&](Vertex w) { return in_rest[w] != 0; };
    std::vector<std::function<bool(Vertex)>> pattern;
    if (type == PairType::TypeI) pattern = {common, common};
    else pattern = {common, rest, common};
    used[b] = 0;
    auto seg = find_link(g, a, b, pattern, used);
    used[b] = 1;
    if (!seg) throw Error(Errc::GreedyStuck, "no segment for anchor pair " + std::to_string(j));
    ch.pair_types.push_back(type);
    (type == PairType::TypeI ? ch.r_alpha : ch.s_alpha) += 1;
    length += static_cast<int>(seg->size()) - 1;
    ch.segments.push_back(PathCert{*seg});
    ch.anchors.push_back(b);

    // Close back to v_1 with a V1 path of length 2, 3 or 4 when it lands on 2k or 2k+2.
    const Vertex first = anchors[0];
    for (int c = 2; c <= 4; ++c) {
      if (length + c != 2 * k && length + c != 2 * k + 2) continue;
      std::vector<std::function<bool(Vertex)>> inner(static_cast<std::size_t>(c - 1),
                                                     [&](Vertex w) { return in_v1[w] != 0; });
      used[first] = 0;
      auto close = find_link(g, b, first, inner, used);
      used[first] = 1;
      if (!close) continue;
      ch.closing = PathCert{*close};
      ch.alpha = 3 * ch.r_alpha + 4 * ch.s_alpha;
      ch.beta = static_cast<int>(ch.anchors.size());
      for (const auto& s : ch.segments)
        res.cycle.vertices.insert(res.cycle.vertices.end(), s.vertices.begin(), s.vertices.end() - 1);
      res.cycle.vertices.insert(res.cycle.vertices.end(), close->begin(), close->end() - 1);
      const int len = res.cycle.length();
      if (len != 2 * k && len != 2 * k + 2)
        throw Error(Errc::ContractViolation, "type chain assembled a cycle of length " + std::to_string(len));
      if (ch.beta > ell) throw Error(Errc::ContractViolation, "type chain used too many anchors");
      return res;
    }
    if (length + 3 + 2 > 2 * k + 2) break;
  }
  throw Error(Errc::GreedyStuck, "type chain found no closing path of a fitting length");
}

std::vector<Cycle> greedy_disjoint_bipartite_cycles(const Graph& g_bip, const VertexMask& side,
                                                    std::span<const int> lengths,
                                                    const VertexMask& exclude, SearchBudget& budget) {
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 4 || lengths[i] % 2 != 0)
      throw Error(Errc::InvalidInput, "lengths must be even and at least 4");
    if (i > 0 && lengths[i] >= lengths[i - 1])
      throw Error(Errc::InvalidInput, "lengths must be strictly descending");
  }
  const int n = g_bip.vertex_count();
  VertexMask keep(static_cast<std::size_t>(n), 1);
  if (!exclude.empty())
    for (Vertex v = 0; v < n; ++v) keep[v] = !exclude[v];
  std::vector<Cycle> out;
  for (int len : lengths) {
    Subgraph res = induced_subgraph(g_bip, keep);
    VertexMask local_side(static_cast<std::size_t>(res.graph.vertex_count()), 0);
    for (Vertex v = 0; v < res.graph.vertex_count(); ++v) local_side[v] = side[res.origin[v]];
    std::optional<Cycle> c;
    try {
      KssCert cert = find_kss(res.graph, local_side, len / 2, {1.0, 200'000});
      Cycle cc;
      for (int i = 0; i < len / 2; ++i) {
        cc.vertices.push_back(cert.side_a[i]);
        cc.vertices.push_back(cert.side_b[i]);
      }
      c = cc;
    } catch (const Error& e) {
      if (e.code() != Errc::NotHypothesis && e.code() != Errc::ContractViolation) throw;
    }
    if (!c) {
      SearchBudget sb{std::max<std::int64_t>(0, std::min<std::int64_t>(2'000'000, budget.limit - budget.used))};
      c = find_cycle_of_length(res.graph, len, {}, sb);
      budget.used += sb.used;
      if (budget.used >= budget.limit) budget.exhausted = true;
    }
    if (!c) break;
    Cycle lifted{res.to_parent(c->vertices)};
    for (Vertex v : lifted.vertices) keep[v] = 0;
    out.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace cec
