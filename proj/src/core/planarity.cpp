#include "planarity.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/planar_face_traversal.hpp>

namespace bipmatch {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

struct FaceCollector : public boost::planar_face_traversal_visitor {
  std::vector<std::vector<Vertex>>* faces;
  std::vector<Vertex> current;

  void begin_face() { current.clear(); }
  void next_vertex(std::size_t v) { current.push_back(static_cast<Vertex>(v)); }
  void end_face() { faces->push_back(current); }
};

bool same_cyclic_sequence(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size() || a.empty()) return false;
  const std::size_t n = a.size();
  for (int dir : {1, -1})
    for (std::size_t shift = 0; shift < n; ++shift) {
      bool equal = true;
      for (std::size_t i = 0; i < n && equal; ++i) {
        std::size_t j = (shift + (dir > 0 ? i : n - i)) % n;
        equal = a[i] == b[j];
      }
      if (equal) return true;
    }
  return false;
}

}  // namespace

PlanarityResult test_planarity(const BipartiteGraph& graph) {
  const int n = graph.vertex_count();
  BoostGraph g(n);
  for (const Edge& e : graph.edges()) boost::add_edge(e.u, e.v, g);
  auto edge_index = boost::get(boost::edge_index, g);
  int count = 0;
  boost::graph_traits<BoostGraph>::edge_iterator ei, ei_end;
  for (boost::tie(ei, ei_end) = boost::edges(g); ei != ei_end; ++ei) boost::put(edge_index, *ei, count++);

  std::vector<std::vector<BoostEdge>> embedding(n);
  PlanarityResult result;
  if (n == 0) {
    result.planar = true;
    return result;
  }
  result.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                                      boost::boyer_myrvold_params::embedding = &embedding[0]);
  if (!result.planar || graph.edge_count() == 0) return result;
  FaceCollector collector;
  collector.faces = &result.faces;
  boost::planar_face_traversal(g, &embedding[0], collector);
  return result;
}

bool bounds_face(const std::vector<std::vector<Vertex>>& faces, const std::vector<Vertex>& cycle) {
  return std::any_of(faces.begin(), faces.end(),
                     [&](const std::vector<Vertex>& f) { return same_cyclic_sequence(f, cycle); });
}

}  // namespace bipmatch
