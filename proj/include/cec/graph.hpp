#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cec {

using Vertex = int;
using VertexList = std::vector<Vertex>;
/// Dense membership flags indexed by vertex id.
using VertexMask = std::vector<std::uint8_t>;

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Duplicate edges are merged. Throws SelfLoop / OutOfRange.
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::int64_t edge_count() const { return edge_count_; }
  double average_degree() const;

  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

  /// All edges with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

 private:
  std::vector<VertexList> adj_;
  std::int64_t edge_count_ = 0;
};

/// A graph derived from a parent graph together with the id map back to it.
struct Subgraph {
  Graph graph;
  VertexList origin;  // local id -> parent id

  Vertex to_parent(Vertex v) const { return origin[v]; }
  VertexList to_parent(std::span<const Vertex> vs) const;
  /// Inverse map sized for the parent; -1 for vertices not present.
  std::vector<int> local_index(int parent_vertex_count) const;
};

Subgraph identity_subgraph(const Graph& g);
/// `inner` is a subgraph of `outer.graph`; result maps straight to outer's parent.
Subgraph compose(const Subgraph& outer, Subgraph inner);

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Subgraph induced_subgraph(const Graph& g, const VertexMask& keep);

/// Same vertex ids, only the edges accepted by `keep(u, v)`.
template <class Pred>
Graph edge_subgraph(const Graph& g, Pred keep) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && keep(u, v)) es.push_back({u, v});
  return Graph(g.vertex_count(), es);
}

VertexMask make_mask(int n, std::span<const Vertex> vertices);
VertexList mask_to_list(const VertexMask& mask);

std::int64_t edges_within(const Graph& g, const VertexMask& s);
std::int64_t edges_between(const Graph& g, const VertexMask& a, const VertexMask& b);

// ---------------------------------------------------------------------------
// Edge-list text format

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// ---------------------------------------------------------------------------
// BFS layering

struct LevelDecomposition {
  Vertex root = -1;
  std::vector<VertexList> levels;  // levels[i] sorted
  std::vector<int> level_of;       // -1 when unreachable
  VertexList parent;               // -1 for the root and unreachable vertices
  int depth_budget = 0;

  bool reachable(Vertex v) const { return level_of[v] >= 0; }
  Vertex ancestor_at_depth(Vertex v, int depth) const;
  Vertex lowest_common_ancestor(Vertex u, Vertex v) const;
  /// Tree path u -> lca -> v, both ends included.
  VertexList tree_path(Vertex u, Vertex v) const;
  /// Number of vertices in levels 0..i.
  std::int64_t ball_size(int i) const;
};

/// Neighbors are scanned in sorted order, so the BFS tree is deterministic.
LevelDecomposition bfs_levels(const Graph& g, Vertex root);

// ---------------------------------------------------------------------------
// Peeling and bipartization

/// The d-core as an induced subgraph (possibly empty).
Subgraph peel_min_degree(const Graph& g, int d);

/// Maximal subgraph where surviving P-vertices have degree >= min_p and
/// Q-vertices degree >= min_q. `in_p` marks side P.
Subgraph bipartite_peel(const Graph& g, const VertexMask& in_p, int min_p, int min_q);

struct Bipartization {
  VertexMask side;  // 0 = X, 1 = Y
  Graph bipartite;  // same ids, cut edges only
  std::int64_t cut_size() const { return bipartite.edge_count(); }
};

/// Greedy placement followed by single-vertex local search; the result has
/// no improving single move, so the cut holds at least half the edges.
Bipartization max_cut_bipartition(const Graph& g);

/// Proper 2-coloring if one exists.
bool two_color(const Graph& g, VertexMask& side);

/// Connected components, each sorted, in order of their smallest vertex.
std::vector<VertexList> connected_components(const Graph& g);

}  // namespace cec
