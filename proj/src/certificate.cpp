#include "cec/certificate.hpp"

#include <algorithm>
#include <unordered_set>

namespace cec {

namespace {

std::string edge_str(Vertex u, Vertex v) {
  return std::to_string(u) + "-" + std::to_string(v);
}

Verdict distinct_in_range(const Graph& g, const VertexList& vs) {
  std::unordered_set<Vertex> seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!g.contains(vs[i]))
      return Verdict::fail("vertex " + std::to_string(vs[i]) + " out of range at position " +
                           std::to_string(i));
    if (!seen.insert(vs[i]).second)
      return Verdict::fail("repeated vertex " + std::to_string(vs[i]) + " at position " +
                           std::to_string(i));
  }
  return Verdict::pass();
}

}  // namespace

Verdict verify_certificate(const Graph& g, const Cycle& c) {
  if (c.length() < 3) return Verdict::fail("cycle shorter than 3");
  if (auto v = distinct_in_range(g, c.vertices); !v) return v;
  const auto& vs = c.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
    if (!g.has_edge(a, b))
      return Verdict::fail("non-edge " + edge_str(a, b) + " at position " + std::to_string(i));
  }
  return Verdict::pass();
}

Verdict verify_certificate(const Graph& g, const PathCert& p) {
  if (p.vertices.empty()) return Verdict::fail("empty path");
  if (auto v = distinct_in_range(g, p.vertices); !v) return v;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    if (!g.has_edge(p.vertices[i], p.vertices[i + 1]))
      return Verdict::fail("non-edge " + edge_str(p.vertices[i], p.vertices[i + 1]) +
                           " at position " + std::to_string(i));
  return Verdict::pass();
}

Verdict verify_certificate(const Graph& g, const KssCert& k) {
  if (static_cast<int>(k.side_a.size()) != k.s || static_cast<int>(k.side_b.size()) != k.s)
    return Verdict::fail("side sizes differ from s");
  VertexList all = k.side_a;
  all.insert(all.end(), k.side_b.begin(), k.side_b.end());
  if (auto v = distinct_in_range(g, all); !v) return Verdict::fail("sides overlap: " + v.reason);
  for (Vertex a : k.side_a)
    for (Vertex b : k.side_b)
      if (!g.has_edge(a, b)) return Verdict::fail("missing biclique edge " + edge_str(a, b));
  return Verdict::pass();
}

Verdict verify_certificate(const Graph& g, const ThetaGraph& t) {
  if (auto v = verify_certificate(g, t.cycle); !v) return v;
  const auto& vs = t.cycle.vertices;
  auto ix = std::find(vs.begin(), vs.end(), t.chord_x);
  auto iy = std::find(vs.begin(), vs.end(), t.chord_y);
  if (ix == vs.end() || iy == vs.end()) return Verdict::fail("chord endpoint not on cycle");
  if (!g.has_edge(t.chord_x, t.chord_y)) return Verdict::fail("chord is not an edge");
  long d = std::labs(static_cast<long>(ix - iy));
  long len = static_cast<long>(vs.size());
  if (std::min(d, len - d) < 2) return Verdict::fail("chord joins cycle-adjacent vertices");
  return Verdict::pass();
}

bool pairwise_disjoint(const std::vector<Cycle>& cycles) {
  std::unordered_set<Vertex> seen;
  for (const auto& c : cycles)
    for (Vertex v : c.vertices)
      if (!seen.insert(v).second) return false;
  return true;
}

Verdict verify_certificate(const Graph& g, const CycleFamily& f) {
  if (f.cycles.empty()) return Verdict::fail("empty family");
  if (f.r < 2) return Verdict::fail("r below 2");
  for (std::size_t j = 0; j < f.cycles.size(); ++j) {
    if (auto v = verify_certificate(g, f.cycles[j]); !v)
      return Verdict::fail("cycle " + std::to_string(j) + ": " + v.reason);
    int want = 2 * f.r + 2 * static_cast<int>(j);
    if (f.cycles[j].length() != want)
      return Verdict::fail("length gap: cycle " + std::to_string(j) + " has length " +
                           std::to_string(f.cycles[j].length()) + ", expected " +
                           std::to_string(want));
  }
  if (f.disjoint && !pairwise_disjoint(f.cycles)) return Verdict::fail("cycles share a vertex");
  return Verdict::pass();
}

CycleFamily make_family(std::vector<Cycle> cycles, bool disjoint) {
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const Cycle& a, const Cycle& b) { return a.length() < b.length(); });
  CycleFamily f;
  f.r = cycles.empty() ? 0 : cycles.front().length() / 2;
  f.cycles = std::move(cycles);
  f.disjoint = disjoint;
  return f;
}

}  // namespace cec
