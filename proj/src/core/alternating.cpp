#include "alternating.hpp"

#include <string>
#include <vector>

#include "errors.hpp"

namespace bipmatch {

std::string_view to_string(AlternatingPathType type) {
  switch (type) {
    case AlternatingPathType::Type1: return "type1";
    case AlternatingPathType::Type2: return "type2";
    case AlternatingPathType::Type3: return "type3";
  }
  return "?";
}

std::optional<AlternatingPathType> classify_alternating_path(const BipartiteGraph& graph,
                                                             const Matching& perfect,
                                                             std::span<const Vertex> path) {
  if (path.size() < 2) throw InvalidArgument("a path needs at least two vertices");
  std::vector<char> seen(graph.vertex_count(), 0);
  for (Vertex v : path) {
    if (!graph.contains(v)) throw InvalidArgument("unknown vertex " + std::to_string(v));
    if (seen[v]) throw InvalidArgument("vertex " + std::to_string(v) + " repeats on the path");
    seen[v] = 1;
  }
  std::vector<char> in_matching;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!graph.has_edge(path[i], path[i + 1]))
      throw InvalidArgument("no edge between " + std::to_string(path[i]) + " and " +
                            std::to_string(path[i + 1]));
    in_matching.push_back(perfect.contains(make_edge(graph, path[i], path[i + 1])) ? 1 : 0);
  }
  for (std::size_t i = 0; i + 1 < in_matching.size(); ++i)
    if (in_matching[i] == in_matching[i + 1]) return std::nullopt;
  const bool first = in_matching.front();
  const bool last = in_matching.back();
  if (first && last) return AlternatingPathType::Type2;
  if (!first && !last) return AlternatingPathType::Type1;
  return AlternatingPathType::Type3;
}

}  // namespace bipmatch
