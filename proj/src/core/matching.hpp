#pragma once

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "graph.hpp"

namespace bipmatch {

// Maximum-cardinality matching by Hopcroft-Karp, O(E sqrt V). With `rng`
// the search order is shuffled, which yields a different (still maximum)
// matching; without it the result is deterministic.
Matching max_matching(const BipartiteGraph& graph, std::mt19937* rng = nullptr);

bool has_perfect_matching(const BipartiteGraph& graph);
std::optional<Matching> perfect_matching(const BipartiteGraph& graph, std::mt19937* rng = nullptr);

// A perfect matching containing every edge of `forced`, if one exists.
std::optional<Matching> extend_to_perfect(const BipartiteGraph& graph, const Matching& forced);

// True iff graph - X has a perfect matching.
bool is_conformal_set(const BipartiteGraph& graph, std::span<const Vertex> vertices);

// Edges lying in some perfect matching. Computed from the strong components
// of one M-direction: a non-matching edge is admissible iff it lies on an
// M-alternating cycle. Throws PreconditionError without a perfect matching.
std::vector<Edge> admissible_edges(const BipartiteGraph& graph);

bool is_matching_covered(const BipartiteGraph& graph);

// Connected components of the admissible subgraph, sorted, ordered by their
// smallest vertex.
std::vector<std::vector<Vertex>> elementary_components(const BipartiteGraph& graph);

// The elementary component containing `v` as a stand-alone graph: induced on
// the component, keeping admissible edges only.
Subgraph elementary_component_of(const BipartiteGraph& graph, Vertex v);

// k-extendibility: connected, at least 2k+2 vertices, balanced, and for all
// S1 in class 1, S2 in class 2 with |S1| = |S2| <= k the graph B - S1 - S2 has
// a perfect matching. Polynomial: O(n^{2k}) incremental augmentations.
bool is_extendible(const BipartiteGraph& graph, int k);

// Same side conditions, but tested through the neighbourhood surplus
// |N(S)| >= |S| + k for all non-empty S in class 1 with |S| <= n1 - k.
// Exponential in n1; refuses n1 > 20 with CapacityError.
bool is_extendible_by_surplus(const BipartiteGraph& graph, int k);

}  // namespace bipmatch
