#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "cec/error.hpp"
#include "cec/extractors.hpp"

namespace cec {

int ThetaArcs::vertex_count() const {
  int n = 2;
  for (const auto& a : arcs) n += static_cast<int>(a.size()) - 2;
  return n;
}

VertexList ThetaArcs::vertices() const {
  VertexList out{x, y};
  for (const auto& a : arcs) out.insert(out.end(), a.begin() + 1, a.end() - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> ThetaArcs::edges() const {
  std::vector<Edge> out;
  for (const auto& a : arcs)
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
      out.push_back({std::min(a[i], a[i + 1]), std::max(a[i], a[i + 1])});
  std::sort(out.begin(), out.end());
  return out;
}

ThetaArcs theta_arcs(const ThetaGraph& t) {
  const auto& vs = t.cycle.vertices;
  const int len = t.cycle.length();
  const int ix = static_cast<int>(std::find(vs.begin(), vs.end(), t.chord_x) - vs.begin());
  const int iy = static_cast<int>(std::find(vs.begin(), vs.end(), t.chord_y) - vs.begin());
  if (ix >= len || iy >= len) throw Error(Errc::InvalidInput, "chord endpoint not on cycle");
  ThetaArcs out;
  out.x = t.chord_x;
  out.y = t.chord_y;
  for (int i = ix;; i = (i + 1) % len) {
    out.arcs[0].push_back(vs[i]);
    if (i == iy) break;
  }
  for (int i = ix;; i = (i - 1 + len) % len) {
    out.arcs[1].push_back(vs[i]);
    if (i == iy) break;
  }
  out.arcs[2] = {t.chord_x, t.chord_y};
  return out;
}

ThetaGraph cycle_with_chord(const Graph& g, int k) {
  if (k < 2) throw Error(Errc::InvalidInput, "k must be at least 2");
  for (int core_degree = k + 1; core_degree >= 3; --core_degree) {
    Subgraph core = peel_min_degree(g, core_degree);
    if (core.graph.vertex_count() == 0) continue;
    const Graph& h = core.graph;
    // Grow a path by endpoint extension until the endpoint is saturated.
    std::vector<int> pos(static_cast<std::size_t>(h.vertex_count()), -1);
    VertexList path{0};
    pos[0] = 0;
    while (true) {
      Vertex end = path.back();
      Vertex next = -1;
      for (Vertex w : h.neighbors(end))
        if (pos[w] < 0) {
          next = w;
          break;
        }
      if (next < 0) break;
      pos[next] = static_cast<int>(path.size());
      path.push_back(next);
    }
    const int last = static_cast<int>(path.size()) - 1;
    std::vector<int> nbr_pos;
    for (Vertex w : h.neighbors(path.back())) nbr_pos.push_back(pos[w]);
    std::sort(nbr_pos.begin(), nbr_pos.end());
    // min degree >= 3, so there are at least three path neighbours.
    const int far = nbr_pos.front();
    const int mid = nbr_pos[1];
    ThetaGraph t;
    for (int i = far; i <= last; ++i) t.cycle.vertices.push_back(core.origin[path[i]]);
    t.chord_x = core.origin[path[last]];
    t.chord_y = core.origin[path[mid]];
    return t;
  }
  throw Error(Errc::BelowThreshold, "graph has an empty 3-core");
}

// ---------------------------------------------------------------------------

namespace {

struct Segment {
  int arc;
  int from;
  int to;
};

struct Endpoint {
  enum Kind { X, Y, Interior } kind;
  int arc = -1;
  int idx = -1;
  Vertex v = -1;
};

class ThetaRoutes {
 public:
  explicit ThetaRoutes(const ThetaArcs& t) : t_(t) {
    for (int i = 0; i < 3; ++i) len_[i] = static_cast<int>(t.arcs[i].size()) - 1;
  }

  // All simple u-v routes as segment lists; u and v are distinct.
  template <class Fn>
  void for_each_route(const Endpoint& u, const Endpoint& v, Fn&& fn) const {
    using K = Endpoint::Kind;
    if (u.kind == K::X && v.kind == K::Y) {
      for (int l = 0; l < 3; ++l) fn({{l, 0, len_[l]}}, len_[l]);
      return;
    }
    if (u.kind != K::Interior) {
      const bool from_x = u.kind == K::X;
      const int j = v.arc, b = v.idx;
      fn({{j, from_x ? 0 : len_[j], b}}, from_x ? b : len_[j] - b);
      for (int l = 0; l < 3; ++l) {
        if (l == j) continue;
        if (from_x)
          fn({{l, 0, len_[l]}, {j, len_[j], b}}, len_[l] + len_[j] - b);
        else
          fn({{l, len_[l], 0}, {j, 0, b}}, len_[l] + b);
      }
      return;
    }
    const int i = u.arc, a = u.idx, j = v.arc, b = v.idx;
    if (i == j) {
      fn({{i, a, b}}, std::abs(a - b));
      for (int l = 0; l < 3; ++l) {
        if (l == i) continue;
        if (a < b)
          fn({{i, a, 0}, {l, 0, len_[l]}, {i, len_[i], b}}, a + len_[l] + len_[i] - b);
        else
          fn({{i, a, len_[i]}, {l, len_[l], 0}, {i, 0, b}}, len_[i] - a + len_[l] + b);
      }
      return;
    }
    const int l = 3 - i - j;
    fn({{i, a, 0}, {j, 0, b}}, a + b);
    fn({{i, a, len_[i]}, {j, len_[j], b}}, len_[i] - a + len_[j] - b);
    fn({{i, a, 0}, {l, 0, len_[l]}, {j, len_[j], b}}, a + len_[l] + len_[j] - b);
    fn({{i, a, len_[i]}, {l, len_[l], 0}, {j, 0, b}}, len_[i] - a + len_[l] + b);
  }

  VertexList materialize(const std::vector<Segment>& route) const {
    VertexList out;
    for (const Segment& s : route) {
      const auto& arc = t_.arcs[s.arc];
      const int step = s.to >= s.from ? 1 : -1;
      for (int p = s.from;; p += step) {
        if (out.empty() || out.back() != arc[p]) out.push_back(arc[p]);
        if (p == s.to) break;
      }
    }
    return out;
  }

 private:
  const ThetaArcs& t_;
  int len_[3];
};

std::vector<Endpoint> theta_endpoints(const ThetaArcs& t) {
  std::vector<Endpoint> out;
  out.push_back({Endpoint::X, -1, -1, t.x});
  out.push_back({Endpoint::Y, -1, -1, t.y});
  for (int i = 0; i < 3; ++i)
    for (int p = 1; p + 1 < static_cast<int>(t.arcs[i].size()); ++p)
      out.push_back({Endpoint::Interior, i, p, t.arcs[i][p]});
  std::stable_sort(out.begin(), out.end(),
                   [](const Endpoint& a, const Endpoint& b) { return a.v < b.v; });
  return out;
}

}  // namespace

bool split_two_colors(const ThetaArcs& theta, const VertexMask& in_a) {
  for (const Edge& e : theta.edges())
    if (in_a[e.u] == in_a[e.v]) return false;
  return true;
}

std::map<int, PathCert> enumerate_theta_ab_paths(const ThetaArcs& theta, const VertexMask& in_a) {
  ThetaRoutes routes(theta);
  auto ends = theta_endpoints(theta);
  std::map<int, PathCert> found;
  const int max_len = theta.vertex_count() - 1;
  for (std::size_t p = 0; p < ends.size(); ++p) {
    for (std::size_t q = 0; q < ends.size(); ++q) {
      if (p == q || !in_a[ends[p].v] || in_a[ends[q].v]) continue;
      // Routes are generated from the X/Y endpoint when one end is a branch vertex.
      const Endpoint* u = &ends[p];
      const Endpoint* v = &ends[q];
      bool reversed = false;
      if (u->kind == Endpoint::Interior && v->kind != Endpoint::Interior) {
        std::swap(u, v);
        reversed = true;
      } else if (u->kind == Endpoint::Y && v->kind == Endpoint::X) {
        std::swap(u, v);
        reversed = true;
      }
      routes.for_each_route(*u, *v, [&](std::vector<Segment> route, int length) {
        if (found.count(length)) return;
        VertexList vs = routes.materialize(route);
        if (reversed) std::reverse(vs.begin(), vs.end());
        found.emplace(length, PathCert{std::move(vs)});
      });
      if (static_cast<int>(found.size()) == max_len) return found;
    }
  }
  return found;
}

std::vector<PathCert> theta_ab_paths(const ThetaGraph& theta, std::span<const Vertex> a_set,
                                     std::span<const int> lengths) {
  ThetaArcs arcs = theta_arcs(theta);
  VertexList vs = arcs.vertices();
  VertexMask in_a(static_cast<std::size_t>(vs.back() + 1), 0);
  int inside = 0;
  for (Vertex v : a_set) {
    if (!std::binary_search(vs.begin(), vs.end(), v))
      throw Error(Errc::InvalidInput, "vertex " + std::to_string(v) + " is not on the theta");
    if (!in_a[v]) ++inside;
    in_a[v] = 1;
  }
  if (inside == 0 || inside == static_cast<int>(vs.size()))
    throw Error(Errc::InvalidInput, "split must be a nonempty proper subset");
  for (int len : lengths)
    if (len < 1 || len >= static_cast<int>(vs.size()))
      throw Error(Errc::InvalidInput, "length " + std::to_string(len) + " out of range");
  if (split_two_colors(arcs, in_a))
    throw Error(Errc::BipartitionCase, "split two-colors the theta");
  auto found = enumerate_theta_ab_paths(arcs, in_a);
  std::vector<PathCert> out;
  for (int len : lengths) {
    auto it = found.find(len);
    if (it == found.end())
      throw Error(Errc::ContractViolation, "no A-B path of length " + std::to_string(len));
    out.push_back(it->second);
  }
  return out;
}

}  // namespace cec
