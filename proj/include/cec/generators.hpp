#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "cec/certificate.hpp"
#include "cec/extractors.hpp"
#include "cec/graph.hpp"

namespace cec {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // lowest terms, den > 0

  static Rational of(std::int64_t num, std::int64_t den);
  bool operator==(const Rational&) const = default;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct BipartiteInstance {
  Graph graph;
  VertexMask side;  // 1 for the first a vertices
  Rational expected_average_degree;
};

/// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.
BipartiteInstance gen_complete_bipartite(int a, int b);

struct RandomInstance {
  Graph graph;
  double realized_average_degree = 0;
  int attempts = 0;
};

/// G(n, d/(n-1)), resampled up to 16 times until the average degree reaches d.
/// Throws UnsatisfiableDensity when every attempt falls short.
RandomInstance gen_random_avg_degree(int n, double d, std::uint64_t seed);

struct ThetaInstance {
  Graph graph;
  ThetaArcs arcs;
  /// Present when one arc is a single edge, i.e. the theta is a chorded cycle.
  std::optional<ThetaGraph> cert;
};

/// Branch vertices 0 and 1 joined by three internally disjoint paths of the
/// given lengths. Throws InvalidArcs.
ThetaInstance gen_theta(std::array<int, 3> arc_lengths);

struct LayeredInstance {
  Graph graph;
  Vertex root = 0;
  int overflow_level = 0;  // e(L_i, L_{i+1}) > k(|L_i| + |L_{i+1}|) at this level
  int expected_anchor_depth = 0;  // upper bound on the split's anchor depth
  int biclique_side = 0;
};

/// A rooted tree whose levels `depth` and `depth+1` are joined by a complete
/// bipartite graph with 2k+1 vertices per side, plus seeded pendant padding
/// above level depth-1.
LayeredInstance gen_layered_overflow(int k, int depth, std::uint64_t seed = 0);

}  // namespace cec
