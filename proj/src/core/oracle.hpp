#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "mlp.hpp"

namespace bipmatch {

// Exhaustive reference implementations. Every entry point refuses inputs
// beyond the guard with CapacityError.
struct SizeGuard {
  int max_vertices = 20;
  std::int64_t max_matchings = 1'000'000;
};

void check_guard(const BipartiteGraph& graph, const SizeGuard& guard);

// All perfect matchings, each once, ordered by the choice sequence of the
// class-1 vertices 0, 1, ... (lexicographic on mate vectors).
std::vector<Matching> enumerate_perfect_matchings(const BipartiteGraph& graph, const SizeGuard& guard = {});

struct MlpWitness {
  Matching matching;
  std::vector<Vertex> path1;  // a1 ... b1
  std::vector<Vertex> path2;  // a2 ... b2
};

struct BruteMlpResult {
  bool linked = false;
  std::optional<MlpWitness> witness;
};

// For every perfect matching M (containing `cover` when given), depth-first
// search for disjoint internally M-conformal a1-b1 and a2-b2 paths.
BruteMlpResult brute_2mlp(const MlpProblem& problem, const Cover* cover = nullptr, const SizeGuard& guard = {});
// Same with the perfect matchings supplied by the caller (for corpus loops).
BruteMlpResult brute_2mlp_over(const MlpProblem& problem, const std::vector<Matching>& matchings,
                               const Cover* cover = nullptr);

// Internally M-conformal a-b path by plain search over all simple paths.
bool brute_reach_internally_conformal(const BipartiteGraph& graph, const Matching& perfect, Vertex a, Vertex b,
                                      const SizeGuard& guard = {});

struct Cross {
  Matching matching;
  std::vector<Vertex> path1;
  std::vector<Vertex> path2;
};

enum class CrossKind { Plain, Strong, Conformal };

// Cross over the cycle C (vertex sequence of a conformal cycle): pegs s1, s2,
// t1, t2 in cyclic order, disjoint M-alternating paths s1-t1 and s2-t2 that
// avoid C otherwise. Strong adds balanced pegs and equal path types;
// conformal asks for C + P1 + P2 to be a conformal subgraph.
// Throws PreconditionError if C is not a conformal cycle.
std::optional<Cross> find_matching_cross(const BipartiteGraph& graph, const std::vector<Vertex>& cycle,
                                         CrossKind kind, const SizeGuard& guard = {});
bool has_matching_cross(const BipartiteGraph& graph, const std::vector<Vertex>& cycle, const SizeGuard& guard = {});
bool has_strong_matching_cross(const BipartiteGraph& graph, const std::vector<Vertex>& cycle,
                               const SizeGuard& guard = {});
bool has_conformal_cross(const BipartiteGraph& graph, const std::vector<Vertex>& cycle, const SizeGuard& guard = {});

// A conformal subgraph that is a bisubdivision of K3,3: branch vertices
// x0..x2 (class 1), y0..y2 (class 2) and the nine paths, paths[3*i + j]
// running from x_i to y_j.
struct K33Bisubdivision {
  std::array<Vertex, 3> xs{};
  std::array<Vertex, 3> ys{};
  std::vector<std::vector<Vertex>> paths;
};

// When `required_cycle` is given, every edge of that cycle must lie on the
// bisubdivision.
std::optional<K33Bisubdivision> find_conformal_k33_bisubdivision(
    const BipartiteGraph& graph, const std::vector<Vertex>* required_cycle = nullptr, const SizeGuard& guard = {});

// Throws PreconditionError unless the graph is matching covered.
bool brute_contains_k33(const BipartiteGraph& graph, const SizeGuard& guard = {});

// |M cut(X)| = 1 for every perfect matching M.
bool check_tight_cut_bruteforce(const BipartiteGraph& graph, const std::vector<Vertex>& shore,
                                const SizeGuard& guard = {});

// Simple cycles as vertex sequences starting at their smallest vertex, each
// once (one direction). Lengths in [min_length, max_length].
std::vector<std::vector<Vertex>> enumerate_cycles(const BipartiteGraph& graph, int min_length, int max_length,
                                                  const SizeGuard& guard = {});

}  // namespace bipmatch
