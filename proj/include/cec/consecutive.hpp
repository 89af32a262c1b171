#pragma once

#include <span>
#include <string>
#include <vector>

#include "cec/certificate.hpp"
#include "cec/graph.hpp"

namespace cec {

struct ConsecutiveOptions {
  double eps = 1.0;
  int max_roots = 8;
};

/// Levels 0 .. depth_budget-1 are examined: depth_budget = floor(log_{1+eps/k} n) + 1,
/// so any family found there has shortest length <= 2 log_{1+eps/k} n + 2.
int depth_budget(int n, int k, double eps);
/// 2 log_{1+eps/k}(n) + 2.
double shortest_length_bound(int n, int k, double eps);

/// Split of a same-level target set at its lowest common ancestor in the BFS tree.
struct BranchSplit {
  std::vector<Edge> subtree;  // tree edges from each target up to `top`
  VertexList set_a;           // targets under one child of `top`
  VertexList set_b;           // the remaining targets
  Vertex top = -1;
  int anchor_depth = 0;  // level(targets) - level(top)
  int branch_count = 0;
};

/// `branch` picks which child class becomes set_a (taken modulo the count).
BranchSplit minimal_subtree_split(const LevelDecomposition& decomp,
                                  std::span<const Vertex> targets, int branch = 0);

struct RefinedBall {
  Subgraph graph;  // subgraph of the input graph
  LevelDecomposition decomp;
  int refinements = 0;
};

/// Ensures e(H[S]) + e(S, V \ S) > threshold * |S| for every BFS ball
/// S = L_0 u ... u L_i, i <= last_level, by moving to the complement of the
/// first failing ball and re-rooting at its highest-degree vertex.
/// Throws Exhausted if the graph empties.
RefinedBall refine_dense_ball(const Graph& h, double threshold, const LevelDecomposition& decomp,
                              int last_level);

/// Requires e(L_i, L_{i+1}) > k(|L_i| + |L_{i+1}|). Result in h's ids, lengths
/// 2a+2, ..., 2a+2k with a the anchor depth of the split.
CycleFamily level_overflow_cycles(const Graph& h, const LevelDecomposition& decomp, int level,
                                  int k);

/// k = 2, requires e(L_i, L_{i+1}) >= |L_i| + 2|L_{i+1}| + 1.
CycleFamily k2_cross_level_cycles(const Graph& g, const LevelDecomposition& decomp, int level);

/// k = 2, requires e(G[L_i]) >= 2|L_i| + 1.
CycleFamily k2_intra_level_cycles(const Graph& g, const LevelDecomposition& decomp, int level);

struct EngineTrace {
  std::string branch;  // "overflow", "k2-cross", "k2-intra"
  Vertex root = -1;
  int level = -1;
  int refinements = 0;
  int roots_tried = 0;
  int depth_budget = 0;
  /// Levels whose growth |L_{i+1}| > (eps/k)|ball_i| was checked and held.
  int growth_levels_checked = 0;
};

/// k cycles of consecutive even lengths (not necessarily disjoint), shortest
/// <= 2 log_{1+eps/k} n + 2. Guaranteed when the average degree is at least
/// 8k+4eps (k >= 3) or 5k+2eps (k = 2); otherwise best effort, throwing
/// BelowThreshold on failure.
CycleFamily find_consecutive_even_cycles(const Graph& g, int k, ConsecutiveOptions opts = {},
                                         EngineTrace* trace = nullptr);

/// Joins a path whose ends sit on the same BFS level (interior on that level
/// or deeper) with the tree path between its ends.
Cycle close_through_tree(const LevelDecomposition& decomp, const VertexList& path);

}  // namespace cec
