#include <doctest.h>

#include <set>

#include "cec/error.hpp"
#include "cec/generators.hpp"
#include "cec/oracle.hpp"
#include "support.hpp"

using namespace cec;
using namespace cec::test;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidInput;
}

// Independent count: every cyclic vertex sequence of each length, divided by
// the 2 * len rotations and reflections.
std::map<int, std::int64_t> naive_cycle_counts(const Graph& g, int max_len) {
  std::map<int, std::int64_t> sequences;
  const int n = g.vertex_count();
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  VertexList path;
  auto dfs = [&](auto&& self, Vertex v) -> void {
    const int len = static_cast<int>(path.size());
    if (len >= 3 && g.has_edge(v, path.front())) ++sequences[len];
    if (len == max_len) return;
    for (Vertex w : g.neighbors(v)) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = 1;
    path = {s};
    dfs(dfs, s);
    on[s] = 0;
  }
  for (auto& [len, c] : sequences) c /= 2 * len;
  return sequences;
}

// Independent decision: try every pair of cycles for k = 2.
bool naive_has_pair(const Graph& g) {
  auto all = enumerate_simple_cycles(g, g.vertex_count());
  for (const auto& a : all.cycles) {
    if (a.length() % 2 != 0 || a.length() < 4) continue;
    for (const auto& b : all.cycles) {
      if (b.length() != a.length() + 2) continue;
      if (pairwise_disjoint({a, b})) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("enumerate_simple_cycles examples") {
  auto k4 = enumerate_simple_cycles(complete_graph(4), 4);
  CHECK(k4.cycles.size() == 7);
  int tri = 0, quad = 0;
  for (const auto& c : k4.cycles) (c.length() == 3 ? tri : quad) += 1;
  CHECK(tri == 4);
  CHECK(quad == 3);

  std::mt19937_64 rng(1);
  CHECK(enumerate_simple_cycles(random_tree(15, rng), 15).cycles.empty());

  auto c6 = enumerate_simple_cycles(cycle_graph(6), 6);
  REQUIRE(c6.cycles.size() == 1);
  CHECK(c6.cycles[0].vertices == VertexList{0, 1, 2, 3, 4, 5});
  CHECK_FALSE(c6.partial);

  auto cut = enumerate_simple_cycles(complete_graph(9), 9, 100);
  CHECK(cut.partial);
}

TEST_CASE("property: cycle enumeration agrees with a naive count and is canonical") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, 0.5, rng);
    const int max_len = 3 + static_cast<int>(rng() % (n - 2));
    auto e = enumerate_simple_cycles(g, max_len);
    std::map<int, std::int64_t> got;
    std::set<VertexList> seen;
    for (const auto& c : e.cycles) {
      ++got[c.length()];
      CHECK(verify_certificate(g, c).ok);
      const auto& v = c.vertices;
      CHECK(*std::min_element(v.begin(), v.end()) == v.front());
      CHECK(v[1] < v.back());
      CHECK(seen.insert(v).second);
    }
    CHECK(got == naive_cycle_counts(g, max_len));
  }
}

TEST_CASE("oracle examples") {
  Graph c4c6 = disjoint_union(cycle_graph(4), cycle_graph(6));
  OracleResult yes = oracle_find_family(c4c6, 2);
  CHECK(yes.exists);
  REQUIRE(yes.witness.has_value());
  CHECK(yes.witness->r == 2);
  CHECK(verify_certificate(c4c6, *yes.witness).ok);

  BipartiteInstance k48 = gen_complete_bipartite(4, 8);
  OracleResult no = oracle_find_family(k48.graph, 2);
  CHECK_FALSE(no.exists);
  CHECK_FALSE(no.witness.has_value());
  CHECK(no.r_max == 2);  // 2rk + k(k-1) = 4r + 2 <= 12

  BipartiteInstance k55 = gen_complete_bipartite(5, 5);
  OracleResult k = oracle_find_family(k55.graph, 2);
  CHECK(k.exists);
  CHECK(verify_certificate(k55.graph, *k.witness).ok);

  // A lone C_8 plus C_10: r = 4.
  Graph big = disjoint_union(cycle_graph(8), cycle_graph(10));
  OracleResult r4 = oracle_find_family(big, 2);
  REQUIRE(r4.exists);
  CHECK(r4.witness->r == 4);

  CHECK_FALSE(oracle_find_family(Graph(3), 2).exists);
  CHECK(code_of([] { oracle_find_family(complete_graph(12), 2, 10); }) == Errc::BudgetExceeded);
}

TEST_CASE("property: oracle agrees with a naive pair search") {
  std::mt19937_64 rng(52);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
    OracleResult r = oracle_find_family(g, 2);
    const bool expect = naive_has_pair(g);
    CHECK(r.exists == expect);
    if (r.exists) {
      ++yes;
      CHECK(verify_certificate(g, *r.witness).ok);
      CHECK(r.witness->disjoint);
    } else {
      ++no;
    }
  }
  CHECK(yes > 5);
  CHECK(no > 20);
}

TEST_CASE("oracle with k = 3") {
  Graph three = disjoint_union(disjoint_union(cycle_graph(4), cycle_graph(6)), cycle_graph(8));
  OracleResult r = oracle_find_family(three, 3);
  REQUIRE(r.exists);
  CHECK(verify_certificate(three, *r.witness).ok);
  CHECK_FALSE(oracle_find_family(disjoint_union(cycle_graph(4), cycle_graph(8)), 3).exists);
}

TEST_CASE("gen_complete_bipartite") {
  BipartiteInstance k48 = gen_complete_bipartite(4, 8);
  CHECK(k48.expected_average_degree == Rational::of(16, 3));
  CHECK(k48.graph.average_degree() == doctest::Approx(16.0 / 3));
  CHECK(k48.graph.edge_count() == 32);
  CHECK(k48.side[0] == 1);
  CHECK(k48.side[4] == 0);

  BipartiteInstance empty = gen_complete_bipartite(0, 5);
  CHECK(empty.graph.edge_count() == 0);
  CHECK(empty.expected_average_degree == Rational::of(0, 1));

  for (int s = 1; s <= 6; ++s)
    CHECK(gen_complete_bipartite(s, s).expected_average_degree == Rational::of(s, 1));

  // 2 * 4 * (n - 4) / n over the K_{4, n-4} family.
  for (int n = 10; n <= 14; ++n) {
    Rational r = gen_complete_bipartite(4, n - 4).expected_average_degree;
    CHECK(r == Rational::of(8 * (n - 4), n));
  }
  CHECK(Rational::of(6, -4) == Rational{-3, 2});
  CHECK(code_of([] { gen_complete_bipartite(-1, 2); }) == Errc::InvalidInput);
}

TEST_CASE("gen_random_avg_degree") {
  RandomInstance z = gen_random_avg_degree(100, 0, 1);
  CHECK(z.graph.edge_count() == 0);

  RandomInstance full = gen_random_avg_degree(50, 49, 1);
  CHECK(full.graph.edge_count() == 50 * 49 / 2);

  RandomInstance a = gen_random_avg_degree(300, 10, 77), b = gen_random_avg_degree(300, 10, 77);
  CHECK(a.graph.edges() == b.graph.edges());
  CHECK(a.realized_average_degree >= 10);
  CHECK(a.realized_average_degree == doctest::Approx(a.graph.average_degree()));
  RandomInstance c = gen_random_avg_degree(300, 10, 78);
  CHECK(c.graph.edges() != a.graph.edges());

  CHECK(code_of([] { gen_random_avg_degree(10, 12, 1); }) == Errc::InvalidInput);
  // On two vertices the single edge appears with probability 0.01 per sample.
  CHECK(code_of([] { gen_random_avg_degree(2, 0.01, 1); }) == Errc::UnsatisfiableDensity);
}

TEST_CASE("gen_theta") {
  ThetaInstance t122 = gen_theta({1, 2, 2});
  CHECK(t122.graph.vertex_count() == 4);
  CHECK(t122.graph.edge_count() == 5);
  REQUIRE(t122.cert.has_value());
  CHECK(t122.cert->cycle.length() == 4);
  CHECK(verify_certificate(t122.graph, *t122.cert).ok);

  ThetaInstance t133 = gen_theta({1, 3, 3});
  CHECK(t133.graph.vertex_count() == 6);
  REQUIRE(t133.cert.has_value());
  CHECK(t133.cert->cycle.length() == 6);
  CHECK(verify_certificate(t133.graph, *t133.cert).ok);

  ThetaInstance t222 = gen_theta({2, 2, 2});
  CHECK_FALSE(t222.cert.has_value());
  CHECK(t222.graph.vertex_count() == 5);
  CHECK(t222.graph.degree(0) == 3);
  CHECK(t222.graph.degree(1) == 3);

  CHECK(code_of([] { gen_theta({1, 1, 3}); }) == Errc::InvalidArcs);
  CHECK(code_of([] { gen_theta({0, 2, 3}); }) == Errc::InvalidArcs);
}

TEST_CASE("gen_layered_overflow") {
  for (int k = 2; k <= 5; ++k)
    for (int depth = 1; depth <= 4; ++depth)
      for (std::uint64_t seed : {0u, 9u}) {
        LayeredInstance inst = gen_layered_overflow(k, depth, seed);
        LevelDecomposition d = bfs_levels(inst.graph, inst.root);
        REQUIRE(static_cast<int>(d.levels.size()) > inst.overflow_level + 1);
        VertexMask a(static_cast<std::size_t>(inst.graph.vertex_count()), 0), b(a.size(), 0);
        for (Vertex v : d.levels[inst.overflow_level]) a[v] = 1;
        for (Vertex v : d.levels[inst.overflow_level + 1]) b[v] = 1;
        const auto la = static_cast<std::int64_t>(d.levels[inst.overflow_level].size());
        const auto lb = static_cast<std::int64_t>(d.levels[inst.overflow_level + 1].size());
        CHECK(edges_between(inst.graph, a, b) > k * (la + lb));
        CHECK(inst.biclique_side == 2 * k + 1);
        CHECK(inst.expected_anchor_depth == depth);
      }
  LayeredInstance x = gen_layered_overflow(3, 2, 5), y = gen_layered_overflow(3, 2, 5);
  CHECK(x.graph.edges() == y.graph.edges());
  CHECK(code_of([] { gen_layered_overflow(1, 2); }) == Errc::InvalidInput);
  CHECK(code_of([] { gen_layered_overflow(2, 0); }) == Errc::InvalidInput);
}
