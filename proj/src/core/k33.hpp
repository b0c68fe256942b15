#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace bipmatch {

bool is_heawood(const BipartiteGraph& graph);

// Two vertices per colour class whose removal disconnects the graph.
struct SplittingSet {
  Vertex a1 = -1, a2 = -1;  // class 1, a1 < a2
  Vertex b1 = -1, b2 = -1;  // class 2, b1 < b2
  std::vector<std::vector<Vertex>> components;  // of B - S, in host ids
};

// Lexicographically first (a1, a2, b1, b2) with B - S disconnected.
// Throws PreconditionError unless the graph is a brace.
std::optional<SplittingSet> find_splitting_set(const BipartiteGraph& graph);

// Summand i: the subgraph induced on component i plus S, with all four edges
// of the cycle a1 b1 a2 b2 added.
std::vector<BipartiteGraph> splitting_summands(const BipartiteGraph& graph, const SplittingSet& split);

// Structural recursion for braces: planar -> free; Heawood -> free; a
// splitting set -> recurse into the summands (any contains K3,3 -> contains);
// otherwise contains. A summand that is not a brace is only tolerated when
// the graph is T10; anything else raises StructuralAnomaly.
// Throws PreconditionError unless the graph is a brace.
bool brace_contains_k33(const BipartiteGraph& graph);

// Same recursion without the brace check on the input, for graphs already
// known to be braces (leaves of a decomposition).
bool brace_contains_k33_unchecked(const BipartiteGraph& graph);

// Some brace of the decomposition contains K3,3.
// Throws PreconditionError unless the graph is matching covered.
bool contains_k33(const BipartiteGraph& graph);

}  // namespace bipmatch
