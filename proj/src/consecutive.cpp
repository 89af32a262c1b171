#include "cec/consecutive.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

#include "cec/error.hpp"
#include "cec/extractors.hpp"

namespace cec {

int depth_budget(int n, int k, double eps) {
  if (n <= 1) return 1;
  const double base = std::log1p(eps / k);
  // Nudge down so exact powers do not round up past the bound.
  return static_cast<int>(std::floor(std::log(static_cast<double>(n)) / base + 1e-9)) + 1;
}

double shortest_length_bound(int n, int k, double eps) {
  return 2.0 * std::log(static_cast<double>(std::max(n, 1))) / std::log1p(eps / k) + 2.0;
}

Cycle close_through_tree(const LevelDecomposition& decomp, const VertexList& path) {
  if (path.size() < 2) throw Error(Errc::ContractViolation, "path too short to close");
  VertexList back = decomp.tree_path(path.back(), path.front());
  Cycle c{path};
  c.vertices.insert(c.vertices.end(), back.begin() + 1, back.end() - 1);
  return c;
}

BranchSplit minimal_subtree_split(const LevelDecomposition& decomp,
                                  std::span<const Vertex> targets, int branch) {
  VertexList ts(targets.begin(), targets.end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  if (ts.size() < 2) throw Error(Errc::InvalidInput, "need at least two targets");
  const int level = decomp.level_of[ts.front()];
  for (Vertex v : ts)
    if (decomp.level_of[v] != level || level < 0)
      throw Error(Errc::InvalidInput, "targets must share one BFS level");

  BranchSplit out;
  Vertex top = ts.front();
  for (Vertex v : ts) top = decomp.lowest_common_ancestor(top, v);
  out.top = top;
  const int top_depth = decomp.level_of[top];
  out.anchor_depth = level - top_depth;

  std::map<Vertex, VertexList> by_child;
  for (Vertex v : ts) by_child[decomp.ancestor_at_depth(v, top_depth + 1)].push_back(v);
  out.branch_count = static_cast<int>(by_child.size());
  const int pick = ((branch % out.branch_count) + out.branch_count) % out.branch_count;
  int idx = 0;
  for (auto& [child, group] : by_child) {
    auto& dst = idx++ == pick ? out.set_a : out.set_b;
    dst.insert(dst.end(), group.begin(), group.end());
  }
  std::sort(out.set_b.begin(), out.set_b.end());

  std::vector<std::uint8_t> seen(decomp.level_of.size(), 0);
  for (Vertex v : ts) {
    for (Vertex w = v; w != top && !seen[w]; w = decomp.parent[w]) {
      seen[w] = 1;
      Vertex p = decomp.parent[w];
      out.subtree.push_back({std::min(w, p), std::max(w, p)});
    }
  }
  std::sort(out.subtree.begin(), out.subtree.end());
  return out;
}

RefinedBall refine_dense_ball(const Graph& h, double threshold, const LevelDecomposition& decomp,
                              int last_level) {
  RefinedBall out{identity_subgraph(h), decomp, 0};
  while (true) {
    const Graph& g = out.graph.graph;
    const auto& d = out.decomp;
    std::int64_t inside = 0, degree_sum = 0, size = 0;
    int failing = -1;
    const int top = std::min<int>(last_level, static_cast<int>(d.levels.size()) - 1);
    for (int i = 0; i <= top; ++i) {
      for (Vertex v : d.levels[i]) {
        degree_sum += g.degree(v);
        ++size;
        for (Vertex w : g.neighbors(v)) {
          const int lw = d.level_of[w];
          if ((lw >= 0 && lw < i) || (lw == i && w > v)) ++inside;
        }
      }
      // Only proper balls are constrained.
      if (size == g.vertex_count()) break;
      // e(H[S]) + e(S, out) = sum of degrees - e(H[S])
      if (static_cast<double>(degree_sum - inside) <= threshold * static_cast<double>(size)) {
        failing = i;
        break;
      }
    }
    if (failing < 0) return out;

    VertexMask keep(static_cast<std::size_t>(g.vertex_count()), 1);
    for (int i = 0; i <= failing; ++i)
      for (Vertex v : d.levels[i]) keep[v] = 0;
    Subgraph rest = compose(out.graph, induced_subgraph(g, keep));
    if (rest.graph.vertex_count() == 0 || rest.graph.edge_count() == 0)
      throw Error(Errc::Exhausted, "dense-ball refinement emptied the graph");
    Vertex root = 0;
    for (Vertex v = 1; v < rest.graph.vertex_count(); ++v)
      if (rest.graph.degree(v) > rest.graph.degree(root)) root = v;
    out.graph = std::move(rest);
    out.decomp = bfs_levels(out.graph.graph, root);
    out.decomp.depth_budget = decomp.depth_budget;
    ++out.refinements;
  }
}

namespace {

struct LevelCounts {
  std::vector<std::int64_t> cross;  // e(L_i, L_{i+1})
  std::vector<std::int64_t> intra;  // e(G[L_i])
};

LevelCounts count_level_edges(const Graph& g, const LevelDecomposition& d) {
  LevelCounts c;
  c.cross.assign(d.levels.size(), 0);
  c.intra.assign(d.levels.size(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int lv = d.level_of[v];
    if (lv < 0) continue;
    for (Vertex w : g.neighbors(v)) {
      if (d.level_of[w] == lv + 1) ++c.cross[lv];
      else if (d.level_of[w] == lv && w > v) ++c.intra[lv];
    }
  }
  return c;
}

VertexMask level_mask(const Graph& g, const LevelDecomposition& d, int level) {
  VertexMask m(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : d.levels[level]) m[v] = 1;
  return m;
}

std::optional<Subgraph> surplus_component(const Subgraph& peeled,
                                          const std::function<std::int64_t(const VertexList&)>& need) {
  for (const VertexList& comp : connected_components(peeled.graph)) {
    if (comp.size() < 2) continue;
    Subgraph c = compose(peeled, induced_subgraph(peeled.graph, comp));
    if (c.graph.edge_count() >= need(c.origin)) return c;
  }
  return std::nullopt;
}

CycleFamily family_from_paths(const LevelDecomposition& decomp,
                              const std::vector<VertexList>& paths) {
  std::vector<Cycle> cycles;
  for (const auto& p : paths) cycles.push_back(close_through_tree(decomp, p));
  CycleFamily f = make_family(std::move(cycles), false);
  for (std::size_t i = 1; i < f.cycles.size(); ++i)
    if (f.cycles[i].length() != f.cycles[i - 1].length() + 2)
      throw Error(Errc::ContractViolation, "closed paths do not give consecutive lengths");
  return f;
}

// Two cycles from a bipartite surplus e(U, W) >= |U| + 2|W| + 1 where all of U
// sits on one BFS level and W on that level or the next one.
CycleFamily cycles_from_bipartite_surplus(const Graph& g, const LevelDecomposition& decomp,
                                          const VertexMask& in_u, const VertexMask& in_w) {
  Graph cross = edge_subgraph(g, [&](Vertex a, Vertex b) {
    return (in_u[a] && in_w[b]) || (in_w[a] && in_u[b]);
  });
  VertexMask keep(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) keep[v] = in_u[v] || in_w[v];
  Subgraph local = induced_subgraph(cross, keep);
  VertexMask local_u(static_cast<std::size_t>(local.graph.vertex_count()), 0);
  for (Vertex v = 0; v < local.graph.vertex_count(); ++v) local_u[v] = in_u[local.origin[v]];

  Subgraph peeled = compose(local, bipartite_peel(local.graph, local_u, 2, 3));
  auto need = [&](const VertexList& origin) {
    std::int64_t nu = 0, nw = 0;
    for (Vertex v : origin) (in_u[v] ? nu : nw) += 1;
    return nu + 2 * nw + 1;
  };
  auto comp = surplus_component(peeled, need);
  if (!comp) throw Error(Errc::ContractViolation, "no component keeps the bipartite surplus");
  const Graph& r = comp->graph;
  const auto& org = comp->origin;

  VertexList upper;
  for (Vertex v = 0; v < r.vertex_count(); ++v)
    if (in_u[org[v]]) upper.push_back(org[v]);
  BranchSplit split = minimal_subtree_split(decomp, upper);
  VertexMask side_a(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : split.set_a) side_a[v] = 1;

  // y: a lower vertex with neighbours in both A and B.
  for (Vertex y = 0; y < r.vertex_count(); ++y) {
    if (in_u[org[y]]) continue;
    VertexList na, nb;
    for (Vertex w : r.neighbors(y)) (side_a[org[w]] ? na : nb).push_back(w);
    if (na.empty() || nb.empty()) continue;
    // The side holding two of y's neighbours plays the role of A below.
    const bool a_double = na.size() >= 2;
    const VertexList& two = a_double ? na : nb;
    const VertexList& one = a_double ? nb : na;
    auto in_two = [&](Vertex w) { return a_double ? side_a[org[w]] != 0 : side_a[org[w]] == 0; };
    const Vertex x1 = two[0], x2 = two[1], x3 = one[0];
    Vertex y2 = -1;
    for (Vertex w : r.neighbors(x1))
      if (w != y) {
        y2 = w;
        break;
      }
    if (y2 < 0) throw Error(Errc::ContractViolation, "peeled upper vertex has degree < 2");
    Vertex x4 = -1;
    for (Vertex w : r.neighbors(y2))
      if (w != x1 && w != x2) {
        x4 = w;
        break;
      }
    if (x4 < 0) throw Error(Errc::ContractViolation, "peeled lower vertex has degree < 3");
    VertexList path = in_two(x4) ? VertexList{x4, y2, x1, y, x3} : VertexList{x2, y, x1, y2, x4};
    for (Vertex& v : path) v = org[v];
    // In both shapes the ends of the whole path and of its last three
    // vertices lie on opposite sides of the split.
    return family_from_paths(decomp, {{path[2], path[3], path[4]}, path});
  }
  throw Error(Errc::ContractViolation, "no lower vertex sees both branches");
}

}  // namespace

CycleFamily level_overflow_cycles(const Graph& h, const LevelDecomposition& decomp, int level,
                                  int k) {
  if (level < 0 || level + 1 >= static_cast<int>(decomp.levels.size()))
    throw Error(Errc::InvalidInput, "level has no successor");
  VertexMask in_l = level_mask(h, decomp, level);
  VertexMask in_next = level_mask(h, decomp, level + 1);
  const std::int64_t cross = edges_between(h, in_l, in_next);
  const std::int64_t sizes = static_cast<std::int64_t>(decomp.levels[level].size() +
                                                       decomp.levels[level + 1].size());
  if (cross <= k * sizes)
    throw Error(Errc::ContractViolation, "level " + std::to_string(level) + " does not overflow");

  Graph between_edges = edge_subgraph(h, [&](Vertex a, Vertex b) {
    return (in_l[a] && in_next[b]) || (in_next[a] && in_l[b]);
  });
  VertexMask keep(static_cast<std::size_t>(h.vertex_count()), 0);
  for (Vertex v = 0; v < h.vertex_count(); ++v) keep[v] = in_l[v] || in_next[v];
  Subgraph between = induced_subgraph(between_edges, keep);
  ThetaGraph local = cycle_with_chord(between.graph, k);
  ThetaGraph theta{Cycle{between.to_parent(local.cycle.vertices)}, between.origin[local.chord_x],
                   between.origin[local.chord_y]};
  if (theta.cycle.length() < 2 * k + 2)
    throw Error(Errc::ContractViolation, "chorded cycle shorter than 2k+2");

  VertexList targets;
  for (Vertex v : theta.cycle.vertices)
    if (in_l[v]) targets.push_back(v);
  std::vector<int> lengths;
  for (int i = 1; i <= k; ++i) lengths.push_back(2 * i);

  BranchSplit split = minimal_subtree_split(decomp, targets);
  for (int b = 0; b < split.branch_count; ++b) {
    if (b > 0) split = minimal_subtree_split(decomp, targets, b);
    std::vector<PathCert> paths;
    try {
      paths = theta_ab_paths(theta, split.set_a, lengths);
    } catch (const Error& e) {
      if (e.code() == Errc::BipartitionCase) continue;
      throw;
    }
    std::vector<VertexList> vs;
    for (auto& p : paths) vs.push_back(std::move(p.vertices));
    return family_from_paths(decomp, vs);
  }
  throw Error(Errc::ContractViolation, "every branch split two-colors the theta");
}

CycleFamily k2_cross_level_cycles(const Graph& g, const LevelDecomposition& decomp, int level) {
  if (level < 0 || level + 1 >= static_cast<int>(decomp.levels.size()))
    throw Error(Errc::InvalidInput, "level has no successor");
  VertexMask in_u = level_mask(g, decomp, level);
  VertexMask in_w = level_mask(g, decomp, level + 1);
  const std::int64_t need = static_cast<std::int64_t>(decomp.levels[level].size() +
                                                      2 * decomp.levels[level + 1].size() + 1);
  if (edges_between(g, in_u, in_w) < need)
    throw Error(Errc::ContractViolation, "cross-level edge count below |L_i| + 2|L_i+1| + 1");
  return cycles_from_bipartite_surplus(g, decomp, in_u, in_w);
}

namespace {

// Five-vertex path with a side pattern such as A A A A B, vertices of r.
std::optional<VertexList> find_side_pattern(const Graph& r, const VertexMask& side,
                                            const std::array<std::uint8_t, 5>& pattern) {
  VertexList path;
  std::vector<std::uint8_t> used(static_cast<std::size_t>(r.vertex_count()), 0);
  auto dfs = [&](auto&& self, Vertex v) -> bool {
    path.push_back(v);
    used[v] = 1;
    if (path.size() == 5) return true;
    for (Vertex w : r.neighbors(v))
      if (!used[w] && side[w] == pattern[path.size()] && self(self, w)) return true;
    used[v] = 0;
    path.pop_back();
    return false;
  };
  for (Vertex v = 0; v < r.vertex_count(); ++v)
    if (side[v] == pattern[0] && dfs(dfs, v)) return path;
  return std::nullopt;
}

}  // namespace

CycleFamily k2_intra_level_cycles(const Graph& g, const LevelDecomposition& decomp, int level) {
  if (level < 0 || level >= static_cast<int>(decomp.levels.size()))
    throw Error(Errc::InvalidInput, "level out of range");
  const VertexList& lv = decomp.levels[level];
  Subgraph inside = induced_subgraph(g, lv);
  if (inside.graph.edge_count() < 2 * static_cast<std::int64_t>(lv.size()) + 1)
    throw Error(Errc::ContractViolation, "level edge count below 2|L_i| + 1");

  Subgraph core = compose(inside, peel_min_degree(inside.graph, 3));
  auto comp = surplus_component(
      core, [](const VertexList& o) { return 2 * static_cast<std::int64_t>(o.size()) + 1; });
  if (!comp) throw Error(Errc::ContractViolation, "no level component keeps the surplus");
  const Graph& r = comp->graph;
  const auto& org = comp->origin;

  BranchSplit split = minimal_subtree_split(decomp, org);
  VertexMask in_a(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : split.set_a) in_a[v] = 1;
  VertexMask side(static_cast<std::size_t>(r.vertex_count()), 0);  // 1 = A
  for (Vertex v = 0; v < r.vertex_count(); ++v) side[v] = in_a[org[v]];

  auto lift = [&](VertexList p) {
    for (Vertex& v : p) v = org[v];
    return p;
  };
  // P1 = a a a a b (short part = last three) and P2 = a a b a b (first three),
  // each also with the two sides swapped.
  const std::array<std::uint8_t, 5> p1{1, 1, 1, 1, 0}, p2{1, 1, 0, 1, 0};
  for (int mirror = 0; mirror < 2; ++mirror) {
    auto flip = [&](std::array<std::uint8_t, 5> p) {
      if (mirror)
        for (auto& x : p) x ^= 1;
      return p;
    };
    if (auto p = find_side_pattern(r, side, flip(p1))) {
      VertexList full = lift(*p);
      return family_from_paths(decomp, {{full[2], full[3], full[4]}, full});
    }
    if (auto p = find_side_pattern(r, side, flip(p2))) {
      VertexList full = lift(*p);
      return family_from_paths(decomp, {{full[0], full[1], full[2]}, full});
    }
  }

  Graph rab = edge_subgraph(r, [&](Vertex a, Vertex b) { return side[a] != side[b]; });
  std::int64_t inner_a = 0, inner_b = 0;
  for (Vertex u = 0; u < r.vertex_count(); ++u)
    for (Vertex v : r.neighbors(u))
      if (u < v && side[u] == side[v]) (side[u] ? inner_a : inner_b) += 1;

  SearchBudget budget{10'000'000};
  if (auto c4 = find_cycle_of_length(rab, 4, {}, budget)) {
    const VertexList& c = c4->vertices;
    std::vector<std::uint8_t> on_c(static_cast<std::size_t>(r.vertex_count()), 0);
    for (Vertex v : c) on_c[v] = 1;
    for (int i = 0; i < 4; ++i) {
      const Vertex a1 = c[i], b1 = c[(i + 1) % 4], a2 = c[(i + 2) % 4], b2 = c[(i + 3) % 4];
      for (Vertex x : r.neighbors(a1)) {
        if (on_c[x]) continue;
        if (side[x] != side[a1]) {
          // x and b1 share a side; both close through the tree.
          return family_from_paths(decomp, {lift({x, a1, b1}), lift({x, a1, b2, a2, b1})});
        }
        return family_from_paths(decomp, {lift({x, a1, b1}), lift({x, a1, b1, a2, b2})});
      }
    }
    throw Error(Errc::ProofCaseExhausted,
                "4-cycle with no outside neighbour in a component with surplus (level " +
                    std::to_string(level) + ", |R|=" + std::to_string(r.vertex_count()) + ")");
  }
  if (inner_a > 0 || inner_b > 0)
    throw Error(Errc::ProofCaseExhausted,
                "no forbidden path although a side spans edges (level " + std::to_string(level) +
                    ", e(A)=" + std::to_string(inner_a) + ", e(B)=" + std::to_string(inner_b) +
                    ", |R|=" + std::to_string(r.vertex_count()) + ")");

  // Both sides independent: R is bipartite between A and B with surplus.
  VertexMask upper(static_cast<std::size_t>(g.vertex_count()), 0);
  VertexMask lower(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < r.vertex_count(); ++v) (side[v] ? upper : lower)[org[v]] = 1;
  return cycles_from_bipartite_surplus(g, decomp, upper, lower);
}

namespace {

Vertex highest_degree(const Graph& g, const std::vector<std::uint8_t>& skip) {
  Vertex best = -1;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!skip[v] && (best < 0 || g.degree(v) > g.degree(best))) best = v;
  return best;
}

CycleFamily lift_family(CycleFamily f, const Subgraph& s) {
  for (auto& c : f.cycles) c.vertices = s.to_parent(c.vertices);
  return f;
}

std::optional<CycleFamily> general_from_root(const Graph& h, Vertex root, int k, double eps,
                                             int t, EngineTrace& tr) {
  LevelDecomposition d0 = bfs_levels(h, root);
  d0.depth_budget = t;
  RefinedBall ball = refine_dense_ball(h, 2 * k + eps, d0, t - 1);
  tr.refinements = ball.refinements;
  const Graph& g = ball.graph.graph;
  const auto& d = ball.decomp;
  LevelCounts counts = count_level_edges(g, d);
  std::int64_t ball_size = 0;
  for (int i = 0; i < t && i + 1 < static_cast<int>(d.levels.size()); ++i) {
    const std::int64_t li = static_cast<std::int64_t>(d.levels[i].size());
    const std::int64_t ln = static_cast<std::int64_t>(d.levels[i + 1].size());
    ball_size += li;
    if (counts.cross[i] > k * (li + ln)) {
      tr.branch = "overflow";
      tr.level = i;
      return lift_family(level_overflow_cycles(g, d, i, k), ball.graph);
    }
    if (static_cast<double>(ln) * k <= eps * static_cast<double>(ball_size))
      throw Error(Errc::ContractViolation, "growth certificate failed at depth " + std::to_string(i));
    ++tr.growth_levels_checked;
  }
  return std::nullopt;
}

std::optional<CycleFamily> k2_from_root(const Graph& g0, Vertex root, double eps, int t,
                                        EngineTrace& tr) {
  LevelDecomposition d0 = bfs_levels(g0, root);
  d0.depth_budget = t;
  RefinedBall ball = refine_dense_ball(g0, 5 + eps, d0, t - 1);
  tr.refinements = ball.refinements;
  const Graph& g = ball.graph.graph;
  const auto& d = ball.decomp;
  LevelCounts counts = count_level_edges(g, d);
  std::int64_t ball_size = 0;
  for (int i = 0; i < t && i < static_cast<int>(d.levels.size()); ++i) {
    const std::int64_t li = static_cast<std::int64_t>(d.levels[i].size());
    const std::int64_t ln =
        i + 1 < static_cast<int>(d.levels.size()) ? static_cast<std::int64_t>(d.levels[i + 1].size()) : 0;
    ball_size += li;
    if (ln > 0 && counts.cross[i] >= li + 2 * ln + 1) {
      tr.branch = "k2-cross";
      tr.level = i;
      return lift_family(k2_cross_level_cycles(g, d, i), ball.graph);
    }
    if (counts.intra[i] >= 2 * li + 1) {
      tr.branch = "k2-intra";
      tr.level = i;
      return lift_family(k2_intra_level_cycles(g, d, i), ball.graph);
    }
    if (static_cast<double>(ln) * 2 <= eps * static_cast<double>(ball_size))
      throw Error(Errc::ContractViolation, "growth certificate failed at depth " + std::to_string(i));
    ++tr.growth_levels_checked;
  }
  return std::nullopt;
}

}  // namespace

CycleFamily find_consecutive_even_cycles(const Graph& g, int k, ConsecutiveOptions opts,
                                         EngineTrace* trace) {
  if (k < 2) throw Error(Errc::InvalidInput, "k must be at least 2");
  if (!(opts.eps > 0)) throw Error(Errc::InvalidInput, "eps must be positive");
  EngineTrace local;
  EngineTrace& tr = trace ? *trace : local;
  tr = EngineTrace{};
  const int n = g.vertex_count();
  if (g.edge_count() == 0) throw Error(Errc::BelowThreshold, "graph has no edges");
  const int t = depth_budget(n, k, opts.eps);
  tr.depth_budget = t;

  auto try_roots = [&](const Graph& h, auto&& attempt) -> std::optional<CycleFamily> {
    std::vector<std::uint8_t> tried(static_cast<std::size_t>(h.vertex_count()), 0);
    for (int a = 0; a < opts.max_roots; ++a) {
      Vertex root = highest_degree(h, tried);
      if (root < 0 || h.degree(root) == 0) break;
      tried[root] = 1;
      ++tr.roots_tried;
      tr.root = root;
      try {
        if (auto f = attempt(h, root)) return f;
      } catch (const Error& e) {
        if (e.code() != Errc::Exhausted && e.code() != Errc::ContractViolation &&
            e.code() != Errc::BelowThreshold)
          throw;
      }
    }
    return std::nullopt;
  };

  if (k == 2) {
    auto f = try_roots(g, [&](const Graph& h, Vertex root) {
      return k2_from_root(h, root, opts.eps, t, tr);
    });
    if (f) return *f;
  }
  Bipartization bip = max_cut_bipartition(g);
  auto f = try_roots(bip.bipartite, [&](const Graph& h, Vertex root) {
    return general_from_root(h, root, k, opts.eps, t, tr);
  });
  if (f) return *f;
  throw Error(Errc::BelowThreshold, "no level overflow found within the depth budget");
}

}  // namespace cec
