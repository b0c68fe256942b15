#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace bipmatch {

// Class-preserving isomorphism a -> b (result[v] is the image of v), found by
// colour refinement followed by backtracking. Meant for small graphs.
std::optional<std::vector<Vertex>> find_isomorphism(const BipartiteGraph& a, const BipartiteGraph& b);

// Isomorphic with the colour classes either preserved or swapped.
bool is_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b);

// Multiset equality up to isomorphism.
bool same_multiset_up_to_isomorphism(const std::vector<BipartiteGraph>& a,
                                     const std::vector<BipartiteGraph>& b);

}  // namespace bipmatch
