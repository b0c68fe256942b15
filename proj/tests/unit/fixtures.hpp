#pragma once

#include <vector>

#include "generators.hpp"
#include "graph.hpp"

namespace fixtures {

using namespace bipmatch;

// C8 walked as v0 v1 ... v7; v(i) maps the walk position to an id.
inline BipartiteGraph c8() { return even_cycle(8); }
inline Vertex v(int i) { return even_cycle_vertex(8, i); }

inline BipartiteGraph p4() { return even_path(4); }

inline BipartiteGraph two_c4() {
  return BipartiteGraph(4, 4, {{0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7}});
}

// Replaces edge u-w by the path u q p w, where p joins class 1 and q class 2.
inline BipartiteGraph subdivide_twice(const BipartiteGraph& g, Edge e) {
  const int n1 = g.n1() + 1;
  auto shift = [&](Vertex x) { return g.in_first_class(x) ? x : x + 1; };
  const Vertex p = g.n1();
  const Vertex q = n1 + g.n2();
  std::vector<Edge> edges;
  for (const Edge& f : g.edges())
    if (!(f == e)) edges.push_back({shift(f.u), shift(f.v)});
  edges.push_back({e.u, q});
  edges.push_back({p, q});
  edges.push_back({p, shift(e.v)});
  return BipartiteGraph(n1, g.n2() + 1, edges);
}

inline BipartiteGraph k33_every_edge_subdivided() {
  BipartiteGraph g = generate(NamedGraphKind::K33);
  for (int i = 0; i < 9; ++i) {
    // the original edges keep their ids among the first three of each class
    Edge e{};
    int seen = 0;
    for (const Edge& f : g.edges())
      if (f.u < 3 && f.v >= g.n1() && f.v < g.n1() + 3 && seen++ == 0) e = f;
    g = subdivide_twice(g, e);
  }
  return g;
}

}  // namespace fixtures
