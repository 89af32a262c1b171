#include "cec/oracle.hpp"

#include <algorithm>

#include "cec/error.hpp"

namespace cec {

CycleEnumeration enumerate_simple_cycles(const Graph& g, int max_len, std::int64_t node_budget) {
  if (max_len < 3) throw Error(Errc::InvalidInput, "max_len must be at least 3");
  CycleEnumeration out;
  const int n = g.vertex_count();
  std::vector<std::uint8_t> on_path(static_cast<std::size_t>(n), 0);
  VertexList path;
  Vertex start = 0;

  auto dfs = [&](auto&& self, Vertex v) -> void {
    if (out.partial) return;
    if (++out.nodes > node_budget) {
      out.partial = true;
      return;
    }
    const int len = static_cast<int>(path.size());
    if (len >= 3 && path[1] < v && g.has_edge(v, start)) out.cycles.push_back(Cycle{path});
    if (len == max_len) return;
    for (Vertex w : g.neighbors(v)) {
      if (w <= start || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };

  for (start = 0; start < n && !out.partial; ++start) {
    path = {start};
    on_path[start] = 1;
    dfs(dfs, start);
    on_path[start] = 0;
  }
  return out;
}

OracleResult oracle_find_family(const Graph& g, int k, std::int64_t node_budget) {
  if (k < 1) throw Error(Errc::InvalidInput, "k must be positive");
  OracleResult res;
  const int n = g.vertex_count();
  // k cycles of lengths 2r..2r+2k-2 use 2rk + k(k-1) vertices.
  int r_max = 1;
  while (2 * (r_max + 1) * k + k * (k - 1) <= n) ++r_max;
  res.r_max = r_max;
  if (r_max < 2) return res;

  const int max_len = 2 * r_max + 2 * k - 2;
  CycleEnumeration en = enumerate_simple_cycles(g, max_len, node_budget);
  res.nodes_explored = en.nodes;
  if (en.partial) throw Error(Errc::BudgetExceeded, "cycle enumeration hit the node budget");

  std::vector<std::vector<const Cycle*>> by_len(static_cast<std::size_t>(max_len + 1));
  for (const Cycle& c : en.cycles) by_len[c.length()].push_back(&c);

  std::vector<std::uint8_t> used(static_cast<std::size_t>(n), 0);
  std::vector<const Cycle*> chosen;
  std::int64_t budget_left = node_budget - en.nodes;

  for (int r = 2; r <= r_max; ++r) {
    bool feasible = true;
    for (int j = 0; j < k; ++j)
      if (by_len[2 * r + 2 * j].empty()) feasible = false;
    if (!feasible) continue;
    chosen.clear();
    auto pick = [&](auto&& self, int j) -> bool {
      if (j == k) return true;
      for (const Cycle* c : by_len[2 * r + 2 * j]) {
        if (--budget_left < 0) throw Error(Errc::BudgetExceeded, "oracle backtracking hit the node budget");
        ++res.nodes_explored;
        bool free = true;
        for (Vertex v : c->vertices)
          if (used[v]) {
            free = false;
            break;
          }
        if (!free) continue;
        for (Vertex v : c->vertices) used[v] = 1;
        chosen.push_back(c);
        if (self(self, j + 1)) return true;
        chosen.pop_back();
        for (Vertex v : c->vertices) used[v] = 0;
      }
      return false;
    };
    if (pick(pick, 0)) {
      std::vector<Cycle> cycles;
      for (const Cycle* c : chosen) cycles.push_back(*c);
      res.exists = true;
      res.witness = make_family(std::move(cycles), true);
      return res;
    }
  }
  return res;
}

}  // namespace cec
