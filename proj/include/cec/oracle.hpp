#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cec/certificate.hpp"
#include "cec/graph.hpp"

namespace cec {

struct CycleEnumeration {
  std::vector<Cycle> cycles;
  bool partial = false;  // node budget ran out
  std::int64_t nodes = 0;
};

/// Every simple cycle with at most max_len vertices, once each: the minimum
/// vertex comes first and its smaller cycle-neighbour second.
CycleEnumeration enumerate_simple_cycles(const Graph& g, int max_len,
                                         std::int64_t node_budget = 100'000'000);

struct OracleResult {
  bool exists = false;
  std::optional<CycleFamily> witness;
  int r_min = 2;
  int r_max = 1;  // empty range when no r is feasible
  std::int64_t nodes_explored = 0;
};

/// Decides whether g has k vertex-disjoint cycles of lengths 2r, ..., 2r+2k-2
/// for some r >= 2. Throws BudgetExceeded instead of answering "no" when the
/// search was cut short.
OracleResult oracle_find_family(const Graph& g, int k, std::int64_t node_budget = 100'000'000);

}  // namespace cec
