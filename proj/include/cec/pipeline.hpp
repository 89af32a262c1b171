#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cec/certificate.hpp"
#include "cec/extractors.hpp"
#include "cec/graph.hpp"

namespace cec {

enum class Mode { Exact, Asymptotic, K2 };

std::string_view mode_name(Mode m);
std::optional<Mode> parse_mode(std::string_view s);

struct Params {
  int k = 2;
  double eps = 1.0;
  Mode mode = Mode::Exact;
  /// Fraction of n a V2 vertex must exceed in V1 to be heavy. Unset: 1 - eps/k
  /// (exact, k2) or 1 - 1/(k sqrt k) (asymptotic).
  std::optional<double> heavy_threshold;
  /// U collects V1' vertices of degree >= n / divisor. Unset: log2 n.
  std::optional<double> degree_cap_divisor;
  /// Largest r tried by the deletion stage. Unset: floor(log_{1+1/(4k)} n) + 1.
  std::optional<int> depth_budget;
  /// Total search nodes shared by all budgeted stages.
  std::int64_t budget = 100'000'000;
  /// Cap on a single exact-length cycle search.
  std::int64_t per_search_budget = 2'000'000;

  int s() const { return (k * k + 3 * k) / 2; }
  double heavy_fraction() const;
  double degree_cap(int n) const;
  int depth_for(int n) const;
  void validate() const;  // throws InvalidInput
};

struct DeletionRecord {
  int r = 0;
  CycleFamily family;  // k cycles, lengths 2r..2r+2k-2, possibly overlapping
  VertexList removed;  // union of the family's vertices, sorted
};

struct DeletionTrace {
  std::vector<DeletionRecord> records;
  VertexList terminal_vertices;  // vertices of the last graph, original ids
  bool budget_hit = false;
};

struct DeletionOutcome {
  DeletionTrace trace;
  std::optional<CycleFamily> family;  // disjoint, when the stage already succeeded
  std::string how;                    // "direct" or "repeated-r"
};

/// Repeatedly removes a minimal-r family of k consecutive even cycles (r <= t).
/// A family that happens to be disjoint, or k records sharing one r, ends the
/// stage with a disjoint family.
DeletionOutcome iterative_deletion(const Graph& g, const Params& params, SearchBudget& budget);

/// The first r shared by k records: the j-th of them contributes its cycle
/// of length 2r + 2(j-1). Records are vertex-disjoint, so the result is too.
std::optional<CycleFamily> assemble_repeated_r(const DeletionTrace& trace, int k);

struct Partition {
  VertexList v1_prime, v2_prime, u_set, v1, v2, m_set;
  int m = 0;
  // Densities and the regime thresholds they are compared against.
  std::int64_t e_v1 = 0, e_v1_v2 = 0, e_v2 = 0;
  double degree_cap = 0;
  double heavy_cut = 0;  // heavy_fraction * n
  double dense_v1_threshold = 0;   // 7n/8
  double cross_threshold = 0;      // (2k+1)n
  double bookkeeping_eps = 0;      // the tighter eps the counting proof carries
};

Partition partition_vertices(const Graph& g, const DeletionTrace& trace, const Params& params);

/// Cycle of length 2j+2 on the next j+1 vertices of each side, j = 1..k.
/// Throws InsufficientS when the biclique is smaller than (k^2+3k)/2.
CycleFamily carve_from_kss(const KssCert& cert, int k);

struct CycleSchedule {
  std::vector<int> half_lengths;  // c_i = k + 2 - i, i = 1..k
  int ell = 0;                    // longest prefix with sum ceil(c_i/2) <= m
};

CycleSchedule make_schedule(int k, int m);

/// Cycles built by a greedy stage; `stuck_index` names the first cycle that
/// could not be built (-1 if none).
struct PartialFamily {
  std::vector<Cycle> cycles;
  int stuck_index = -1;
  std::string reason;
};

/// Cycle i has length 2c_i and alternates heavy anchors with V1 links
/// v - x - w - y - v' (one link v - x - v' when c_i is odd).
PartialFamily common_neighbor_cycles(const Graph& g, const Partition& part,
                                     const CycleSchedule& sched, const Params& params);

/// One cycle per anchor u: an even path inside G[A_u, B_u) with both ends in
/// A_u = N(u) n V1, closed through u. Lengths 2k+2, 2k, ... down to 4.
PartialFamily anchored_long_cycles(const Graph& g, const Partition& part, const Params& params);

enum class PairType { TypeI, TypeII };

struct TypeChain {
  VertexList anchors;               // v_1 .. v_beta actually used
  std::vector<PairType> pair_types; // classification of each used pair
  std::vector<PathCert> segments;   // v_j .. v_{j+1}, length 3 or 4
  PathCert closing;                 // v_beta .. v_1, length 2, 3 or 4
  int r_alpha = 0;  // type I segments
  int s_alpha = 0;  // type II segments
  int alpha = 0;    // 3 r_alpha + 4 s_alpha
  int beta = 0;     // anchors used
};

struct TypeChainResult {
  Cycle cycle;  // length 2k or 2k+2
  TypeChain chain;
};

/// Throws ClassificationFailed if a pair is neither type and GreedyStuck if
/// no closing fits.
TypeChainResult type_chain_cycle(const Graph& g, const Partition& part, const Params& params);

/// For each length in order, a cycle of exactly that length on unused
/// vertices (biclique first, then exact search); stops at the first miss.
std::vector<Cycle> greedy_disjoint_bipartite_cycles(const Graph& g_bip, const VertexMask& side,
                                                    std::span<const int> lengths,
                                                    const VertexMask& exclude, SearchBudget& budget);

struct StageLog {
  std::string name;
  std::string detail;
  bool ok = false;
};

struct SearchReport {
  bool success = false;
  std::optional<CycleFamily> family;
  std::vector<StageLog> stages;
  Params params;
  bool budget_exhausted = false;
};

/// Soundness: success implies a family that verifies with disjoint = true.
SearchReport run_pipeline(const Graph& g, const Params& params);
SearchReport k2_pipeline(const Graph& g, const Params& params);

}  // namespace cec
