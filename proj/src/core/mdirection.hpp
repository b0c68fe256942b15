#pragma once

#include <span>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace bipmatch {

struct Arc {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Simple loop-free digraph on nodes [0, n). Arcs are kept sorted.
class Digraph {
 public:
  Digraph() = default;
  // Throws InvalidArgument on unknown node, loop or duplicate arc.
  Digraph(int node_count, std::vector<Arc> arcs);

  int node_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::span<const int> successors(int node) const { return out_[node]; }
  bool has_arc(int from, int to) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

// The M-direction of a graph with perfect matching M: edges oriented from
// class 1 to class 2, then every M-edge contracted to one node. Node i is the
// i-th M-edge in ascending order of its class-1 endpoint. An edge u-w with u
// in class 1 and w in class 2 yields the arc node(u) -> node(w).
struct MDirection {
  Digraph digraph;
  std::vector<int> node_of;  // vertex -> node
  Matching matching;
};

MDirection m_direction(const BipartiteGraph& graph, const Matching& perfect);

// Inverse construction: node u becomes class-1 vertex u and class-2 vertex
// n + u joined by a matching edge; arc u -> v becomes edge u, n + v.
std::pair<BipartiteGraph, Matching> from_digraph(const Digraph& digraph);

// Strong components in topological order of the condensation (sources first).
std::vector<std::vector<int>> strong_components(const Digraph& digraph);
bool is_strongly_connected(const Digraph& digraph);

// Same, on the digraph with `removed` nodes deleted; removed nodes appear in
// no component.
std::vector<std::vector<int>> strong_components_without(const Digraph& digraph,
                                                        std::span<const int> removed);

// Nodes reachable from `source` (inclusive) by BFS.
std::vector<char> reachable_from(const Digraph& digraph, int source);

// True iff some internally M-conformal path joins class-1 vertex `a` to
// class-2 vertex `b`; the single edge ab counts.
bool reach_internally_conformal(const BipartiteGraph& graph, const Matching& perfect, Vertex a,
                                Vertex b);

}  // namespace bipmatch
