#pragma once

#include <random>
#include <set>
#include <vector>

#include "cec/graph.hpp"

namespace cec::test {

inline Graph cycle_graph(int n, int offset = 0, int total = -1) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({offset + i, offset + (i + 1) % n});
  for (auto& e : es)
    if (e.u > e.v) std::swap(e.u, e.v);
  return Graph(total < 0 ? offset + n : total, es);
}

inline Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, es);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph(n, es);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (Edge e : b.edges()) es.push_back({e.u + a.vertex_count(), e.v + a.vertex_count()});
  return Graph(a.vertex_count() + b.vertex_count(), es);
}

inline Graph with_edges(const Graph& g, std::vector<Edge> extra, int n = -1) {
  std::vector<Edge> es = g.edges();
  es.insert(es.end(), extra.begin(), extra.end());
  return Graph(n < 0 ? g.vertex_count() : n, es);
}

/// Each pair independently with probability p.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.push_back({i, j});
  return Graph(n, es);
}

/// Random bipartite graph; the first `a` vertices form side A.
inline Graph random_bipartite(int a, int b, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (coin(rng)) es.push_back({i, a + j});
  return Graph(a + b, es);
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back({static_cast<int>(rng() % v), v});
  return Graph(n, es);
}

}  // namespace cec::test
