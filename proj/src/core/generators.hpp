#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace bipmatch {

enum class NamedGraphKind { C4, K33, Cube, Heawood, Rotunda, T10, MoebiusLadder };

struct NamedGraph {
  NamedGraphKind kind = NamedGraphKind::C4;
  int k = 1;  // only for MoebiusLadder: the ladder on 4k+2 vertices
};

// Accepts c4, k33, cube, heawood, rotunda, t10, moebius (with k).
std::optional<NamedGraphKind> named_graph_from_string(std::string_view name);
std::string to_string(NamedGraphKind kind);

// Fixed labellings:
//   C4       K_{2,2}.
//   K33      class 1 {0,1,2} complete to class 2 {3,4,5}.
//   Cube     3-bit words; even parity 000,011,101,110 -> 0..3, odd parity
//            001,010,100,111 -> 4..7; edges join words at Hamming distance 1.
//   Heawood  Fano plane: points 0..6, line 7+j = {j, j+1, j+3} mod 7.
//   Rotunda  four_cycle_sum of three cubes at (0,4,1,5), no cycle edges kept.
//   T10      four_cycle_sum of three K33 at (0,3,1,4), no cycle edges kept.
//   MoebiusLadder(k)  rim cycle of length 4k+2 labelled as even_cycle(),
//            rungs join rim positions i and i + 2k + 1.
// Throws InvalidArgument for MoebiusLadder with k < 1.
BipartiteGraph generate(const NamedGraph& name);
inline BipartiteGraph generate(NamedGraphKind kind) { return generate(NamedGraph{kind, 1}); }

// The designated cycles used to build Rotunda and T10.
inline constexpr std::array<Vertex, 4> kCubeSumCycle{0, 4, 1, 5};
inline constexpr std::array<Vertex, 4> kK33SumCycle{0, 3, 1, 4};

// One summand of a 4-cycle sum: a graph and a 4-cycle (c0, c1, c2, c3) with
// c0, c2 in class 1 and c1, c3 in class 2. Position i of every summand's
// cycle is identified with position i of the others.
struct SumPart {
  BipartiteGraph graph;
  std::array<Vertex, 4> cycle;
};

// Glues the parts on their designated cycles. The cycle edges of the result
// are exactly those listed in `keep_edges`, where index i names the cycle
// edge between positions i and i+1 (mod 4). Duplicate edges are merged.
//
// Labelling of the result: class 1 is [c0, c2, non-cycle class-1 vertices of
// part 0 ascending, of part 1, ...], class 2 likewise [c1, c3, ...].
//
// Throws InvalidArgument for fewer than two parts or a cycle that is not a
// class-alternating 4-cycle, PreconditionError for a non-conformal cycle.
BipartiteGraph four_cycle_sum(const std::vector<SumPart>& parts, const std::vector<int>& keep_edges);

// Random graphs for corpora and benchmarks; deterministic per seed.
// Balanced graph on 2n vertices that contains a perfect matching: a hidden
// perfect matching plus every other pair independently with `density`.
BipartiteGraph random_graph_with_perfect_matching(int n, double density, std::mt19937& rng);
// Matching covered by construction: a hidden perfect matching whose edges
// are also linked into one alternating cycle, plus random extra edges.
BipartiteGraph random_matching_covered(int n, double density, std::mt19937& rng);

}  // namespace bipmatch
