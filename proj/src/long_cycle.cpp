#include <algorithm>
#include <deque>
#include <functional>

#include "cec/error.hpp"
#include "cec/extractors.hpp"

namespace cec {

std::vector<VertexList> biconnected_blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  std::vector<VertexList> blocks;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] >= 0 || g.degree(s) == 0) continue;
    disc[s] = low[s] = timer++;
    stack.push_back({s, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const Vertex v = f.v;
      if (f.next < static_cast<std::size_t>(g.degree(v))) {
        const Vertex w = g.neighbors(v)[f.next++];
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          edge_stack.push_back({v, w});
          disc[w] = low[w] = timer++;
          stack.push_back({w, v, 0});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back({v, w});
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const Vertex p = f.parent;
      stack.pop_back();
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        VertexList block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e.u == p && e.v == v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

namespace {

std::optional<VertexList> rotation_search(const Graph& h, int l_min, Vertex start) {
  const int n = h.vertex_count();
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  VertexList path{start};
  pos[start] = 0;
  auto reindex = [&] {
    for (int i = 0; i < static_cast<int>(path.size()); ++i) pos[path[i]] = i;
  };
  auto extend_back = [&] {
    bool grew = false;
    while (true) {
      Vertex next = -1;
      for (Vertex w : h.neighbors(path.back()))
        if (pos[w] < 0) {
          next = w;
          break;
        }
      if (next < 0) return grew;
      pos[next] = static_cast<int>(path.size());
      path.push_back(next);
      grew = true;
    }
  };
  extend_back();
  std::reverse(path.begin(), path.end());
  reindex();
  extend_back();

  std::vector<std::uint8_t> tried(static_cast<std::size_t>(n), 0);
  const std::int64_t max_steps = static_cast<std::int64_t>(n) * n;
  for (std::int64_t step = 0; step < max_steps; ++step) {
    const int last = static_cast<int>(path.size()) - 1;
    // Closures at either end.
    for (Vertex w : h.neighbors(path.back()))
      if (last - pos[w] + 1 >= l_min) return VertexList(path.begin() + pos[w], path.end());
    for (Vertex w : h.neighbors(path.front()))
      if (pos[w] + 1 >= l_min) return VertexList(path.begin(), path.begin() + pos[w] + 1);
    if (last + 1 >= l_min) {
      for (int i = 0; i + 1 < last; ++i) {
        if (h.has_edge(path.front(), path[i + 1]) && h.has_edge(path.back(), path[i])) {
          VertexList c(path.begin(), path.begin() + i + 1);
          c.insert(c.end(), path.rbegin(), path.rend() - (i + 1));
          return c;
        }
      }
    }
    if (extend_back()) continue;
    // Posa rotation at the back end towards an untried new endpoint.
    tried[path.back()] = 1;
    int pivot = -1;
    for (Vertex w : h.neighbors(path.back())) {
      int i = pos[w];
      if (i < last - 1 && !tried[path[i + 1]]) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      // Try the other end once before giving up.
      std::reverse(path.begin(), path.end());
      reindex();
      if (tried[path.back()]) return std::nullopt;
      continue;
    }
    std::reverse(path.begin() + pivot + 1, path.end());
    reindex();
  }
  return std::nullopt;
}

std::optional<VertexList> exhaustive_long_cycle(const Graph& h, int l_min, SearchBudget& budget) {
  const int n = h.vertex_count();
  VertexMask on(static_cast<std::size_t>(n), 0);
  VertexList path;
  std::function<bool(Vertex, Vertex)> dfs = [&](Vertex s, Vertex v) -> bool {
    if (!budget.tick()) return false;
    if (static_cast<int>(path.size()) >= l_min && h.has_edge(v, s)) return true;
    for (Vertex w : h.neighbors(v)) {
      if (w <= s || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      if (dfs(s, w)) return true;
      path.pop_back();
      on[w] = 0;
      if (budget.exhausted) return false;
    }
    return false;
  };
  for (Vertex s = 0; s < n && !budget.exhausted; ++s) {
    path = {s};
    on[s] = 1;
    if (dfs(s, s)) return path;
    on[s] = 0;
  }
  return std::nullopt;
}

std::optional<VertexList> cycle_in_block(const Graph& h, int l_min, const LongCycleOptions& opts,
                                         SearchBudget& budget) {
  VertexList starts(static_cast<std::size_t>(h.vertex_count()));
  for (Vertex v = 0; v < h.vertex_count(); ++v) starts[v] = v;
  std::stable_sort(starts.begin(), starts.end(),
                   [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
  if (starts.size() > 8) starts.resize(8);
  for (Vertex s : starts)
    if (auto c = rotation_search(h, l_min, s)) return c;
  if (h.vertex_count() <= opts.exhaustive_block_limit || !budget.exhausted)
    return exhaustive_long_cycle(h, l_min, budget);
  return std::nullopt;
}

std::optional<Cycle> search_long_cycle(const Subgraph& sub, int l_min, const LongCycleOptions& opts,
                                       SearchBudget& budget) {
  const int keep = (l_min - 1) / 2 + 1;
  Subgraph core = compose(sub, peel_min_degree(sub.graph, keep));
  if (core.graph.vertex_count() < l_min) return std::nullopt;
  auto blocks = biconnected_blocks(core.graph);
  struct Candidate {
    VertexList vertices;
    bool dense;
  };
  std::vector<Candidate> cands;
  for (auto& b : blocks) {
    if (static_cast<int>(b.size()) < l_min) continue;
    Subgraph bs = induced_subgraph(core.graph, b);
    const long double bound =
        static_cast<long double>(l_min - 1) * (static_cast<long double>(b.size()) - 1) / 2;
    cands.push_back({std::move(b), static_cast<long double>(bs.graph.edge_count()) > bound});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.dense != b.dense) return a.dense;
    return a.vertices.size() > b.vertices.size();
  });
  for (const auto& c : cands) {
    Subgraph block = compose(core, induced_subgraph(core.graph, c.vertices));
    Subgraph stable = peel_min_degree(block.graph, keep);
    if (stable.graph.vertex_count() < block.graph.vertex_count()) {
      if (auto found = search_long_cycle(block, l_min, opts, budget)) return found;
      continue;
    }
    if (auto found = cycle_in_block(block.graph, l_min, opts, budget))
      return Cycle{block.to_parent(*found)};
  }
  return std::nullopt;
}

}  // namespace

Cycle long_cycle(const Graph& g, int l_min, LongCycleOptions opts) {
  if (l_min < 3) throw Error(Errc::InvalidInput, "l_min must be at least 3");
  SearchBudget budget{opts.budget};
  if (auto c = search_long_cycle(identity_subgraph(g), l_min, opts, budget)) return *c;
  // Below the edge hypothesis the peel may discard every long cycle;
  // small blocks of the untouched graph are still searched exhaustively.
  for (const auto& b : biconnected_blocks(g)) {
    const int size = static_cast<int>(b.size());
    if (size < l_min || size > opts.exhaustive_block_limit) continue;
    Subgraph block = induced_subgraph(g, b);
    if (auto found = exhaustive_long_cycle(block.graph, l_min, budget))
      return Cycle{block.to_parent(*found)};
  }
  throw Error(Errc::BelowThreshold, "no cycle of length >= " + std::to_string(l_min) +
                                        (budget.exhausted ? " (budget exhausted)" : ""));
}

PathCert even_endpoints_path(const Graph& g, const Cycle& cycle, const VertexMask& in_a,
                             int target_len) {
  const auto& cv = cycle.vertices;
  const int len = cycle.length();
  if (target_len < 0 || target_len % 2 != 0)
    throw Error(Errc::InfeasibleTrim, "target length must be even");
  if (len < target_len + 2) throw Error(Errc::InfeasibleTrim, "cycle too short for target");
  for (int i = 0; i < len; ++i) {
    if (!g.has_edge(cv[i], cv[(i + 1) % len]))
      throw Error(Errc::InfeasibleTrim, "cycle is not valid in the host graph");
    if (!in_a[cv[i]] && !in_a[cv[(i + 1) % len]])
      throw Error(Errc::InfeasibleTrim, "two consecutive cycle vertices outside A");
  }
  // Open the cycle into a path of even length with both ends in A.
  VertexList p;
  auto rotated_from = [&](int start, int count) {
    VertexList out;
    for (int j = 0; j < count; ++j) out.push_back(cv[(start + j) % len]);
    return out;
  };
  if (len % 2 == 1) {
    int cut = -1;
    for (int i = 0; i < len && cut < 0; ++i)
      if (in_a[cv[i]] && in_a[cv[(i + 1) % len]]) cut = i;
    if (cut < 0) throw Error(Errc::InfeasibleTrim, "odd cycle without an A-A edge");
    p = rotated_from((cut + 1) % len, len);  // drops edge cut -> cut+1
  } else {
    int open = 0;
    for (int i = 0; i < len; ++i)
      if (!in_a[cv[i]]) {
        open = i;
        break;
      }
    p = rotated_from((open + 1) % len, len - 1);  // drops the vertex `open`
  }
  // Trim two edges at a time, keeping both ends in A.
  while (static_cast<int>(p.size()) - 1 > target_len) {
    const std::size_t last = p.size() - 1;
    if (!in_a[p[1]])
      p.erase(p.begin(), p.begin() + 2);
    else if (!in_a[p[last - 1]])
      p.resize(last - 1);
    else {
      p.pop_back();
      p.erase(p.begin());
    }
  }
  if (static_cast<int>(p.size()) - 1 != target_len || !in_a[p.front()] || !in_a[p.back()])
    throw Error(Errc::InfeasibleTrim, "trim did not reach the target");
  return PathCert{std::move(p)};
}

std::optional<Cycle> find_cycle_of_length(const Graph& g, int length, const VertexMask& allowed,
                                          SearchBudget& budget) {
  const int n = g.vertex_count();
  if (length < 3 || length > n) return std::nullopt;
  auto ok = [&](Vertex v) { return allowed.empty() || allowed[v]; };
  std::vector<int> dist(static_cast<std::size_t>(n));
  VertexMask on(static_cast<std::size_t>(n), 0);
  VertexList path;
  std::function<bool(Vertex, Vertex)> dfs = [&](Vertex s, Vertex v) -> bool {
    if (!budget.tick()) return false;
    const int depth = static_cast<int>(path.size()) - 1;
    if (depth == length - 1) return g.has_edge(v, s);
    for (Vertex w : g.neighbors(v)) {
      if (w <= s || on[w] || !ok(w) || dist[w] < 0) continue;
      if (dist[w] > length - depth - 1) continue;
      on[w] = 1;
      path.push_back(w);
      if (dfs(s, w)) return true;
      path.pop_back();
      on[w] = 0;
      if (budget.exhausted) return false;
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (!ok(s) || g.degree(s) < 2) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex w : g.neighbors(u))
        if (w > s && ok(w) && dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
    }
    path = {s};
    on[s] = 1;
    if (dfs(s, s)) return Cycle{path};
    on[s] = 0;
    if (budget.exhausted) return std::nullopt;
  }
  return std::nullopt;
}

std::optional<PathCert> find_path_on(const Graph& g, int count, const VertexMask& allowed,
                                     SearchBudget& budget) {
  const int n = g.vertex_count();
  if (count < 1) return std::nullopt;
  auto ok = [&](Vertex v) { return allowed.empty() || allowed[v]; };
  VertexMask on(static_cast<std::size_t>(n), 0);
  VertexList path;
  std::function<bool(Vertex)> dfs = [&](Vertex v) -> bool {
    if (!budget.tick()) return false;
    if (static_cast<int>(path.size()) == count) return true;
    for (Vertex w : g.neighbors(v)) {
      if (on[w] || !ok(w)) continue;
      on[w] = 1;
      path.push_back(w);
      if (dfs(w)) return true;
      path.pop_back();
      on[w] = 0;
      if (budget.exhausted) return false;
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (!ok(s)) continue;
    path = {s};
    on[s] = 1;
    if (dfs(s)) return PathCert{path};
    on[s] = 0;
    if (budget.exhausted) break;
  }
  return std::nullopt;
}

}  // namespace cec
