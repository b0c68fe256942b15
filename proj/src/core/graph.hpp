#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace bipmatch {

using Vertex = int;

// An edge of a bipartite graph, always stored with the class-1 endpoint first.
struct Edge {
  Vertex u = 0;  // class 1
  Vertex v = 0;  // class 2

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple bipartite graph with dense ids: class 1 is [0, n1), class 2 is
// [n1, n1 + n2). Immutable after construction; edges and adjacency lists are
// kept sorted so that every derived result is deterministic.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Validates every edge (range, class, duplicates) and throws
  // InvalidArgument on the first violation.
  BipartiteGraph(int n1, int n2, std::vector<Edge> edges);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int vertex_count() const { return n1_ + n2_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }
  bool in_first_class(Vertex v) const { return v < n1_; }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const;

  // Index of an edge in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.edges_ == b.edges_;
  }

 private:
  int n1_ = 0;
  int n2_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Orders the endpoints of an edge given in either order.
Edge make_edge(const BipartiteGraph& graph, Vertex a, Vertex b);

// A set of vertex-disjoint edges of some host graph, sorted.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  bool contains(const Edge& e) const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

// Throws InvalidArgument unless every edge exists in `graph` and no two edges
// share an endpoint. Sorts the edge list in place.
void validate_matching(const BipartiteGraph& graph, Matching& matching);

bool is_perfect(const BipartiteGraph& graph, const Matching& matching);

// mate[v] is the partner of v under `matching`, or -1.
std::vector<Vertex> mates(const BipartiteGraph& graph, const Matching& matching);
Matching matching_from_mates(const BipartiteGraph& graph, std::span<const Vertex> mate);

// The result of deleting or keeping a vertex subset: the new graph plus the
// translation between old and new ids.
struct Subgraph {
  BipartiteGraph graph;
  std::vector<Vertex> to_old;  // new id -> old id
  std::vector<Vertex> to_new;  // old id -> new id or -1
};

// Induced subgraph on `keep` (any order, duplicates ignored). New ids keep the
// relative order of old ids inside each colour class.
Subgraph induced_subgraph(const BipartiteGraph& graph, std::span<const Vertex> keep);
Subgraph remove_vertices(const BipartiteGraph& graph, std::span<const Vertex> removed);

// Same vertex set, only the listed edges.
BipartiteGraph with_edges(const BipartiteGraph& graph, std::vector<Edge> edges);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const BipartiteGraph& graph);
bool is_connected(const BipartiteGraph& graph);

// Relabels a graph; perm[old] = new. Classes must be preserved.
BipartiteGraph relabel(const BipartiteGraph& graph, std::span<const Vertex> perm);

// Swaps the two colour classes.
BipartiteGraph transpose(const BipartiteGraph& graph);

// Complete bipartite graph K_{p,q}, path and even cycle helpers.
BipartiteGraph complete_bipartite(int p, int q);
// Even cycle v0 v1 ... v(2k-1): v_i with even i is class-1 vertex i/2, odd i
// is class-2 vertex k + (i-1)/2.
BipartiteGraph even_cycle(int length);
Vertex even_cycle_vertex(int length, int position);
// Path v0 ... v(n-1) with the same alternating labelling; n must be even.
BipartiteGraph even_path(int vertex_count);

}  // namespace bipmatch
