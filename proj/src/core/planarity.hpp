#pragma once

#include <vector>

#include "graph.hpp"

namespace bipmatch {

struct PlanarityResult {
  bool planar = false;
  // Facial walks of one combinatorial embedding, each as a vertex sequence
  // without repeating the first vertex. Empty when not planar.
  std::vector<std::vector<Vertex>> faces;
};

PlanarityResult test_planarity(const BipartiteGraph& graph);
inline bool is_planar(const BipartiteGraph& graph) { return test_planarity(graph).planar; }

// True iff `cycle` (a vertex sequence) is the boundary of one of `faces`,
// in either direction and from any starting point.
bool bounds_face(const std::vector<std::vector<Vertex>>& faces, const std::vector<Vertex>& cycle);

}  // namespace bipmatch
