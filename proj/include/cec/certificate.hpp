#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cec/graph.hpp"

namespace cec {

struct Cycle {
  VertexList vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

struct PathCert {
  VertexList vertices;
  int length() const { return vertices.empty() ? -1 : static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

struct KssCert {
  VertexList side_a;
  VertexList side_b;
  int s = 0;
};

/// k cycles of lengths 2r, 2r+2, ..., 2r+2k-2 in ascending order.
struct CycleFamily {
  std::vector<Cycle> cycles;
  int r = 0;
  bool disjoint = false;

  int k() const { return static_cast<int>(cycles.size()); }
};

/// A cycle plus one chord between two of its vertices.
struct ThetaGraph {
  Cycle cycle;
  Vertex chord_x = -1;
  Vertex chord_y = -1;
};

/// A split of some ambient vertex set relative to a pivot's neighbourhood.
struct NeighborhoodSplit {
  VertexList pivot;
  VertexList set_a;
  VertexList set_b;
  double alpha = 0.0;  // |set_b| / ambient size
};

struct Verdict {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

Verdict verify_certificate(const Graph& g, const Cycle& c);
Verdict verify_certificate(const Graph& g, const PathCert& p);
Verdict verify_certificate(const Graph& g, const KssCert& k);
Verdict verify_certificate(const Graph& g, const ThetaGraph& t);
/// Checks each cycle, the consecutive-even length arithmetic and, when the
/// family claims it, pairwise vertex-disjointness.
Verdict verify_certificate(const Graph& g, const CycleFamily& f);

/// Sort cycles by length and set r from the shortest one.
CycleFamily make_family(std::vector<Cycle> cycles, bool disjoint);

bool pairwise_disjoint(const std::vector<Cycle>& cycles);

}  // namespace cec
