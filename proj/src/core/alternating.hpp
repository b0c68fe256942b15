#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "graph.hpp"

namespace bipmatch {

// Kinds of M-alternating paths, by which end-edges belong to M.
enum class AlternatingPathType {
  Type1,  // neither end-edge in M: the interior is M-conformal (odd length)
  Type2,  // both end-edges in M: M covers the whole path (odd length)
  Type3,  // exactly one end-edge in M (even length)
};

std::string_view to_string(AlternatingPathType type);

// Classifies the vertex sequence `path` against perfect matching `perfect`.
// Returns nullopt when the edges do not alternate. Throws InvalidArgument if
// `path` is not a path of `graph` (fewer than two vertices, a repeated
// vertex, or a missing edge).
std::optional<AlternatingPathType> classify_alternating_path(const BipartiteGraph& graph,
                                                             const Matching& perfect,
                                                             std::span<const Vertex> path);

}  // namespace bipmatch
