#include "cec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <istream>
#include <numeric>
#include <sstream>

#include "cec/error.hpp"

namespace cec {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::Parse: return "Parse";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotHypothesis: return "NotHypothesis";
    case Errc::BelowThreshold: return "BelowThreshold";
    case Errc::BipartitionCase: return "BipartitionCase";
    case Errc::ContractViolation: return "ContractViolation";
    case Errc::InfeasibleTrim: return "InfeasibleTrim";
    case Errc::Exhausted: return "Exhausted";
    case Errc::InsufficientS: return "InsufficientS";
    case Errc::GreedyStuck: return "GreedyStuck";
    case Errc::ClassificationFailed: return "ClassificationFailed";
    case Errc::ProofCaseExhausted: return "ProofCaseExhausted";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::UnsatisfiableDensity: return "UnsatisfiableDensity";
    case Errc::InvalidArcs: return "InvalidArcs";
  }
  return "Unknown";
}

Graph::Graph(int vertex_count) : adj_(static_cast<std::size_t>(std::max(vertex_count, 0))) {}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (const Edge& e : edges) {
    if (e.u == e.v)
      throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    if (!contains(e.u) || !contains(e.v))
      throw Error(Errc::OutOfRange, "edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                        " outside 0.." + std::to_string(vertex_count - 1));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  std::int64_t twice = 0;
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice += static_cast<std::int64_t>(list.size());
  }
  edge_count_ = twice / 2;
}

double Graph::average_degree() const {
  if (adj_.empty()) return 0.0;
  return 2.0 * static_cast<double>(edge_count_) / static_cast<double>(adj_.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

VertexList Subgraph::to_parent(std::span<const Vertex> vs) const {
  VertexList out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(origin[v]);
  return out;
}

std::vector<int> Subgraph::local_index(int parent_vertex_count) const {
  std::vector<int> idx(static_cast<std::size_t>(parent_vertex_count), -1);
  for (int i = 0; i < static_cast<int>(origin.size()); ++i) idx[origin[i]] = i;
  return idx;
}

Subgraph identity_subgraph(const Graph& g) {
  Subgraph s{g, VertexList(static_cast<std::size_t>(g.vertex_count()))};
  std::iota(s.origin.begin(), s.origin.end(), 0);
  return s;
}

Subgraph compose(const Subgraph& outer, Subgraph inner) {
  for (Vertex& v : inner.origin) v = outer.origin[v];
  return inner;
}

Subgraph induced_subgraph(const Graph& g, const VertexMask& keep) {
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  Subgraph out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) {
      local[v] = static_cast<int>(out.origin.size());
      out.origin.push_back(v);
    }
  }
  std::vector<Edge> es;
  for (Vertex u : out.origin)
    for (Vertex v : g.neighbors(u))
      if (u < v && local[v] >= 0) es.push_back({local[u], local[v]});
  out.graph = Graph(static_cast<int>(out.origin.size()), es);
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  for (Vertex v : vertices)
    if (!g.contains(v))
      throw Error(Errc::OutOfRange, "vertex " + std::to_string(v) + " not in graph");
  return induced_subgraph(g, make_mask(g.vertex_count(), vertices));
}

VertexMask make_mask(int n, std::span<const Vertex> vertices) {
  VertexMask m(static_cast<std::size_t>(n), 0);
  for (Vertex v : vertices) m[v] = 1;
  return m;
}

VertexList mask_to_list(const VertexMask& mask) {
  VertexList out;
  for (Vertex v = 0; v < static_cast<Vertex>(mask.size()); ++v)
    if (mask[v]) out.push_back(v);
  return out;
}

std::int64_t edges_within(const Graph& g, const VertexMask& s) {
  std::int64_t count = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!s[u]) continue;
    for (Vertex v : g.neighbors(u))
      if (u < v && s[v]) ++count;
  }
  return count;
}

std::int64_t edges_between(const Graph& g, const VertexMask& a, const VertexMask& b) {
  std::int64_t count = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!a[u]) continue;
    for (Vertex v : g.neighbors(u))
      if (b[v]) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------

namespace {

bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  long long declared = -1;
  long long max_id = -1;
  std::string line;
  int line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0].starts_with('#')) continue;
    auto fail = [&](const std::string& why) {
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": " + why);
    };
    if (toks.size() != 2) fail("expected two fields");
    if (!seen_content && toks[0] == "n") {
      if (!parse_int(toks[1], declared) || declared < 0) fail("bad vertex count");
      seen_content = true;
      continue;
    }
    seen_content = true;
    long long u = 0, v = 0;
    if (!parse_int(toks[0], u) || !parse_int(toks[1], v) || u < 0 || v < 0)
      fail("expected two non-negative integers");
    if (u > 0x3fffffff || v > 0x3fffffff) fail("vertex id too large");
    if (u == v) throw Error(Errc::SelfLoop, "line " + std::to_string(line_no) + ": edge " +
                                               std::to_string(u) + " " + std::to_string(v));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    max_id = std::max({max_id, u, v});
  }
  long long n = max_id + 1;
  if (declared >= 0) {
    if (declared < n)
      throw Error(Errc::Parse, "header declares " + std::to_string(declared) +
                                   " vertices but ids reach " + std::to_string(max_id));
    n = declared;
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------

Vertex LevelDecomposition::ancestor_at_depth(Vertex v, int depth) const {
  while (v >= 0 && level_of[v] > depth) v = parent[v];
  return v;
}

Vertex LevelDecomposition::lowest_common_ancestor(Vertex u, Vertex v) const {
  if (!reachable(u) || !reachable(v)) return -1;
  int d = std::min(level_of[u], level_of[v]);
  u = ancestor_at_depth(u, d);
  v = ancestor_at_depth(v, d);
  while (u != v) {
    u = parent[u];
    v = parent[v];
  }
  return u;
}

VertexList LevelDecomposition::tree_path(Vertex u, Vertex v) const {
  Vertex top = lowest_common_ancestor(u, v);
  VertexList up, down;
  for (Vertex x = u; x != top; x = parent[x]) up.push_back(x);
  up.push_back(top);
  for (Vertex x = v; x != top; x = parent[x]) down.push_back(x);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::int64_t LevelDecomposition::ball_size(int i) const {
  std::int64_t total = 0;
  for (int j = 0; j <= i && j < static_cast<int>(levels.size()); ++j)
    total += static_cast<std::int64_t>(levels[j].size());
  return total;
}

LevelDecomposition bfs_levels(const Graph& g, Vertex root) {
  if (!g.contains(root)) throw Error(Errc::OutOfRange, "root " + std::to_string(root));
  LevelDecomposition d;
  d.root = root;
  d.level_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  d.parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  d.level_of[root] = 0;
  d.levels.push_back({root});
  while (true) {
    VertexList next;
    for (Vertex u : d.levels.back()) {
      for (Vertex v : g.neighbors(u)) {
        if (d.level_of[v] >= 0) continue;
        d.level_of[v] = d.level_of[u] + 1;
        d.parent[v] = u;
        next.push_back(v);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    d.levels.push_back(std::move(next));
  }
  d.depth_budget = static_cast<int>(d.levels.size());
  return d;
}

// ---------------------------------------------------------------------------

Subgraph peel_min_degree(const Graph& g, int d) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  VertexMask alive(static_cast<std::size_t>(n), 1);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < d) {
      alive[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && --deg[w] < d) {
        alive[w] = 0;
        queue.push_back(w);
      }
    }
  }
  return induced_subgraph(g, alive);
}

Subgraph bipartite_peel(const Graph& g, const VertexMask& in_p, int min_p, int min_q) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  VertexMask alive(static_cast<std::size_t>(n), 1);
  std::deque<Vertex> queue;
  auto need = [&](Vertex v) { return in_p[v] ? min_p : min_q; };
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < need(v)) {
      alive[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && --deg[w] < need(w)) {
        alive[w] = 0;
        queue.push_back(w);
      }
    }
  }
  return induced_subgraph(g, alive);
}

Bipartization max_cut_bipartition(const Graph& g) {
  const int n = g.vertex_count();
  Bipartization out;
  out.side.assign(static_cast<std::size_t>(n), 0);
  VertexMask placed(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    int on_x = 0, on_y = 0;
    for (Vertex w : g.neighbors(v)) {
      if (!placed[w]) continue;
      (out.side[w] ? on_y : on_x) += 1;
    }
    out.side[v] = on_x > on_y ? 1 : 0;
    placed[v] = 1;
  }
  // same[v] = neighbours on v's own side; moving v gains same - (deg - same).
  std::vector<int> same(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v))
      if (out.side[w] == out.side[v]) ++same[v];
  std::deque<Vertex> queue;
  VertexMask queued(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    if (2 * same[v] > g.degree(v)) {
      queue.push_back(v);
      queued[v] = 1;
    }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    queued[v] = 0;
    if (2 * same[v] <= g.degree(v)) continue;
    out.side[v] ^= 1;
    same[v] = g.degree(v) - same[v];
    for (Vertex w : g.neighbors(v)) {
      same[w] += out.side[w] == out.side[v] ? 1 : -1;
      if (!queued[w] && 2 * same[w] > g.degree(w)) {
        queue.push_back(w);
        queued[w] = 1;
      }
    }
  }
  out.bipartite = edge_subgraph(g, [&](Vertex u, Vertex v) { return out.side[u] != out.side[v]; });
  return out;
}

bool two_color(const Graph& g, VertexMask& side) {
  const int n = g.vertex_count();
  side.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = color[u] ^ 1;
          q.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) side[v] = static_cast<std::uint8_t>(color[v]);
  return true;
}

std::vector<VertexList> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<VertexList> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      out[id].push_back(u);
      for (Vertex v : g.neighbors(u))
        if (comp[v] < 0) {
          comp[v] = id;
          q.push_back(v);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace cec
