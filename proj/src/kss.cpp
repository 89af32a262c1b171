#include <algorithm>
#include <cmath>

#include "cec/error.hpp"
#include "cec/extractors.hpp"

namespace cec {

bool kss_hypothesis_holds(const Graph& g, const VertexMask& in_a, int s, double delta) {
  long double size_a = 0, size_b = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) (in_a[v] ? size_a : size_b) += 1;
  long double e = static_cast<long double>(g.edge_count());
  return e >= (s - 1 + delta) * size_a && delta * size_a >= std::pow(size_b, s);
}

namespace {

struct SubsetSearch {
  const Graph& g;
  int s;
  std::int64_t cap;  // <= 0: unlimited
  std::int64_t nodes = 0;
  bool capped = false;
  VertexList candidates;
  VertexList chosen;
  VertexList found_common;

  bool run(std::size_t start, const VertexList& common) {
    if (static_cast<int>(chosen.size()) == s) {
      found_common = common;
      return true;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      if (candidates.size() - i < static_cast<std::size_t>(s) - chosen.size()) return false;
      if (cap > 0 && ++nodes > cap) {
        capped = true;
        return false;
      }
      Vertex v = candidates[i];
      auto nb = g.neighbors(v);
      VertexList next;
      if (chosen.empty()) {
        next.assign(nb.begin(), nb.end());
      } else {
        std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                              std::back_inserter(next));
      }
      if (static_cast<int>(next.size()) < s) continue;
      chosen.push_back(v);
      if (run(i + 1, next)) return true;
      chosen.pop_back();
      if (capped) return false;
    }
    return false;
  }
};

}  // namespace

KssCert find_kss(const Graph& g, const VertexMask& in_a, int s, KssOptions opts) {
  if (s < 1) throw Error(Errc::InvalidInput, "s must be positive");
  if (static_cast<int>(in_a.size()) != g.vertex_count())
    throw Error(Errc::InvalidInput, "side mask size mismatch");
  int size_a = 0, size_b = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    (in_a[u] ? size_a : size_b) += 1;
    for (Vertex v : g.neighbors(u))
      if (in_a[u] == in_a[v])
        throw Error(Errc::InvalidInput, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                            " inside one side");
  }
  const bool hypothesis = kss_hypothesis_holds(g, in_a, s, opts.delta);

  // Enumerate s-subsets on whichever side has fewer usable vertices.
  VertexList usable_a, usable_b;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= s) (in_a[v] ? usable_a : usable_b).push_back(v);
  const bool enumerate_b = usable_b.size() <= usable_a.size();
  SubsetSearch search{g, s, 0, 0, false, {}, {}, {}};
  search.candidates = enumerate_b ? usable_b : usable_a;
  std::stable_sort(search.candidates.begin(), search.candidates.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  if (search.candidates.size() > 64) search.cap = opts.node_cap;

  if (static_cast<int>(search.candidates.size()) >= s && search.run(0, {})) {
    KssCert cert;
    cert.s = s;
    VertexList other(search.found_common.begin(), search.found_common.begin() + s);
    VertexList mine = search.chosen;
    std::sort(mine.begin(), mine.end());
    cert.side_a = enumerate_b ? other : mine;
    cert.side_b = enumerate_b ? mine : other;
    return cert;
  }
  if (hypothesis)
    throw Error(Errc::ContractViolation,
                search.capped ? "biclique search cap hit on a hypothesis-met instance"
                              : "no K_{s,s} although the counting hypothesis holds");
  throw Error(Errc::NotHypothesis, "no K_{" + std::to_string(s) + "," + std::to_string(s) +
                                       "} found (|A|=" + std::to_string(size_a) +
                                       ", |B|=" + std::to_string(size_b) + ")" +
                                       (search.capped ? ", search capped" : ""));
}

}  // namespace cec
