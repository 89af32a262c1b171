#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "cec/certificate.hpp"
#include "cec/graph.hpp"

namespace cec {

/// Node counter shared by the budgeted searches. A search that runs out
/// reports "not found" and sets `exhausted`.
struct SearchBudget {
  std::int64_t limit = 100'000'000;
  std::int64_t used = 0;
  bool exhausted = false;

  bool tick() {
    if (++used > limit) exhausted = true;
    return !exhausted;
  }
};

// ---------------------------------------------------------------------------
// Bicliques

struct KssOptions {
  double delta = 1.0;
  /// Node cap for the subset search when the enumerated side exceeds 64 vertices.
  std::int64_t node_cap = 20'000'000;
};

/// Does the bipartite graph (A = in_a, B = rest) meet
/// e >= (s-1+delta)|A| and delta|A| >= |B|^s ?
bool kss_hypothesis_holds(const Graph& g, const VertexMask& in_a, int s, double delta);

/// Finds K_{s,s} in a bipartite graph; side_a of the result lies in A.
/// Throws InvalidInput (an edge inside a side) or NotHypothesis (nothing
/// found and the counting hypothesis fails).
KssCert find_kss(const Graph& g, const VertexMask& in_a, int s, KssOptions opts = {});

// ---------------------------------------------------------------------------
// Thetas

/// Three internally disjoint x-y paths, each listed from x to y.
struct ThetaArcs {
  Vertex x = -1;
  Vertex y = -1;
  std::array<VertexList, 3> arcs;

  int vertex_count() const;
  VertexList vertices() const;
  std::vector<Edge> edges() const;
};

ThetaArcs theta_arcs(const ThetaGraph& t);

/// Cycle with chord, cycle length >= (girth-2)k + 2 when avg degree >= 2k.
/// Throws BelowThreshold when no 3-core exists.
ThetaGraph cycle_with_chord(const Graph& g, int k);

/// For every achievable length, the first A-B path (listed from its A end)
/// found by walking endpoint pairs and the O(1) route shapes a theta admits.
std::map<int, PathCert> enumerate_theta_ab_paths(const ThetaArcs& theta, const VertexMask& in_a);

/// True when every theta edge joins A to its complement.
bool split_two_colors(const ThetaArcs& theta, const VertexMask& in_a);

/// One path per requested length with one end in a_set and the other outside.
/// Throws BipartitionCase when (A, complement) two-colors the theta and
/// ContractViolation if a requested length is missing otherwise.
std::vector<PathCert> theta_ab_paths(const ThetaGraph& theta, std::span<const Vertex> a_set,
                                     std::span<const int> lengths);

// ---------------------------------------------------------------------------
// Long cycles and paths

struct LongCycleOptions {
  std::int64_t budget = 20'000'000;
  int exhaustive_block_limit = 20;
};

/// A cycle of length >= l_min. Guaranteed when e(g) > (l_min-1)|V|/2.
/// Throws BelowThreshold otherwise if no such cycle turns up.
Cycle long_cycle(const Graph& g, int l_min, LongCycleOptions opts = {});

/// Subpath of `cycle` with exactly target_len edges and both ends in A.
/// Requires the non-A vertices to be independent along the cycle.
PathCert even_endpoints_path(const Graph& g, const Cycle& cycle, const VertexMask& in_a,
                             int target_len);

/// Some cycle with exactly `length` vertices, all inside `allowed` (empty
/// mask = everything). Exhaustive up to the budget.
std::optional<Cycle> find_cycle_of_length(const Graph& g, int length, const VertexMask& allowed,
                                          SearchBudget& budget);

/// Some path on exactly `count` vertices inside `allowed`.
std::optional<PathCert> find_path_on(const Graph& g, int count, const VertexMask& allowed,
                                     SearchBudget& budget);

/// Biconnected components as vertex lists (bridges count as blocks).
std::vector<VertexList> biconnected_blocks(const Graph& g);

}  // namespace cec
