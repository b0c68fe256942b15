#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace bipmatch {

// Every connected bipartite graph with a perfect matching and p vertices per
// class, 1 <= p <= max_per_class, one representative per isomorphism class
// (class-preserving). Representatives have sorted biadjacency rows and are
// minimal under column permutations. Refuses max_per_class > 5.
std::vector<BipartiteGraph> exhaustive_corpus(int max_per_class);

// Seeded random matching covered graphs with n vertices per class, n drawn
// uniformly from [min_per_class, max_per_class].
std::vector<BipartiteGraph> random_corpus(int count, int min_per_class, int max_per_class, double density,
                                          std::uint32_t seed);

}  // namespace bipmatch
