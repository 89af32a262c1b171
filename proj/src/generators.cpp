#include "cec/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cec/error.hpp"

namespace cec {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::InvalidInput, "zero denominator");
  if (den < 0) num = -num, den = -den;
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) num /= g, den /= g;
  return {num, den};
}

BipartiteInstance gen_complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw Error(Errc::InvalidInput, "side sizes must be non-negative");
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) es.push_back({u, v});
  BipartiteInstance out;
  out.graph = Graph(a + b, es);
  out.side.assign(static_cast<std::size_t>(a + b), 0);
  std::fill(out.side.begin(), out.side.begin() + a, 1);
  out.expected_average_degree =
      a + b == 0 ? Rational{0, 1} : Rational::of(2LL * a * b, static_cast<std::int64_t>(a) + b);
  return out;
}

namespace {

// G(n, p) by geometric skipping over the pairs (w, v), w < v.
Graph sample_gnp(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> es;
  if (n < 2 || p <= 0) return Graph(n);
  if (p >= 1) {
    for (Vertex v = 1; v < n; ++v)
      for (Vertex w = 0; w < v; ++w) es.push_back({w, v});
    return Graph(n, es);
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double lq = std::log1p(-p);
  std::int64_t v = 1, w = -1;
  while (v < n) {
    const double r = unit(rng);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / lq));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) es.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
  }
  return Graph(n, es);
}

}  // namespace

RandomInstance gen_random_avg_degree(int n, double d, std::uint64_t seed) {
  if (n < 0 || d < 0 || (n > 0 && d > n - 1) || (n == 0 && d > 0))
    throw Error(Errc::InvalidInput, "need 0 <= d <= n-1");
  const double p = n > 1 ? d / (n - 1) : 0.0;
  std::mt19937_64 rng(seed);
  RandomInstance out;
  for (int attempt = 1; attempt <= 16; ++attempt) {
    out.graph = sample_gnp(n, p, rng);
    out.attempts = attempt;
    out.realized_average_degree = out.graph.average_degree();
    // Compare via edge counts to avoid rounding at the boundary.
    if (2.0 * static_cast<double>(out.graph.edge_count()) >= d * n - 1e-9) return out;
  }
  throw Error(Errc::UnsatisfiableDensity,
              "average degree stayed below " + std::to_string(d) + " after 16 samples");
}

ThetaInstance gen_theta(std::array<int, 3> arc_lengths) {
  int ones = 0;
  for (int len : arc_lengths) {
    if (len < 1) throw Error(Errc::InvalidArcs, "arc lengths must be at least 1");
    if (len == 1) ++ones;
  }
  if (ones > 1) throw Error(Errc::InvalidArcs, "at most one arc may be a single edge");
  ThetaInstance out;
  out.arcs.x = 0;
  out.arcs.y = 1;
  Vertex next = 2;
  std::vector<Edge> es;
  for (int i = 0; i < 3; ++i) {
    auto& arc = out.arcs.arcs[i];
    arc.push_back(0);
    for (int j = 1; j < arc_lengths[i]; ++j) arc.push_back(next++);
    arc.push_back(1);
    for (std::size_t j = 0; j + 1 < arc.size(); ++j)
      es.push_back({std::min(arc[j], arc[j + 1]), std::max(arc[j], arc[j + 1])});
  }
  out.graph = Graph(next, es);
  if (ones == 1) {
    const int chord = static_cast<int>(std::find(arc_lengths.begin(), arc_lengths.end(), 1) -
                                       arc_lengths.begin());
    const auto& first = out.arcs.arcs[(chord + 1) % 3];
    const auto& second = out.arcs.arcs[(chord + 2) % 3];
    ThetaGraph t;
    t.cycle.vertices.assign(first.begin(), first.end());  // 0 .. 1
    t.cycle.vertices.insert(t.cycle.vertices.end(), second.rbegin() + 1, second.rend() - 1);
    t.chord_x = 0;
    t.chord_y = 1;
    out.cert = t;
  }
  return out;
}

LayeredInstance gen_layered_overflow(int k, int depth, std::uint64_t seed) {
  if (k < 2) throw Error(Errc::InvalidInput, "k must be at least 2");
  if (depth < 1) throw Error(Errc::InvalidInput, "depth must be at least 1");
  std::mt19937_64 rng(seed);
  const int m = 2 * k + 1;
  LayeredInstance out;
  out.root = 0;
  out.overflow_level = depth;
  out.expected_anchor_depth = depth;
  out.biclique_side = m;

  std::vector<Edge> es;
  std::vector<int> level{0};
  Vertex next = 1;
  auto add = [&](Vertex parent, int at_level) {
    Vertex v = next++;
    level.push_back(at_level);
    es.push_back({parent, v});
    return v;
  };

  // Chain ends at level depth-1 (just the root when depth = 1).
  VertexList ends{0};
  if (depth >= 2) {
    const int chains = 2 + static_cast<int>(rng() % 2);
    ends.clear();
    for (int c = 0; c < chains; ++c) {
      Vertex v = 0;
      for (int l = 1; l <= depth - 1; ++l) v = add(v, l);
      ends.push_back(v);
    }
  }
  VertexList upper, lower;
  for (int i = 0; i < m; ++i) upper.push_back(add(ends[static_cast<std::size_t>(i) % ends.size()], depth));
  for (int i = 0; i < m; ++i) {
    lower.push_back(next++);
    level.push_back(depth + 1);
  }
  for (Vertex u : upper)
    for (Vertex w : lower) es.push_back({u, w});

  // Pendants hang from levels below depth-1 so they never reach level depth.
  if (depth >= 2) {
    VertexList hosts;
    for (Vertex v = 0; v < next; ++v)
      if (level[v] < depth - 1) hosts.push_back(v);
    const int pendants = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * m + 1));
    for (int i = 0; i < pendants; ++i) {
      Vertex h = hosts[rng() % hosts.size()];
      hosts.push_back(add(h, level[h] + 1));
      if (level.back() >= depth - 1) hosts.pop_back();
    }
  }
  out.graph = Graph(next, es);

  LevelDecomposition d = bfs_levels(out.graph, out.root);
  const auto cross = static_cast<std::int64_t>(m) * m;
  const auto bound = static_cast<std::int64_t>(k) *
                     static_cast<std::int64_t>(d.levels[depth].size() + d.levels[depth + 1].size());
  if (static_cast<int>(d.levels.size()) != depth + 2 || cross <= bound)
    throw Error(Errc::ContractViolation, "layered generator broke its own overflow inequality");
  return out;
}

}  // namespace cec
