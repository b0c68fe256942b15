#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace bipmatch {

// Terminals a1, a2 in class 1 and b1, b2 in class 2; the task is to link
// a1-b1 and a2-b2 by disjoint internally M-conformal paths for some perfect
// matching M.
struct MlpProblem {
  BipartiteGraph graph;
  Vertex a1 = -1, a2 = -1, b1 = -1, b2 = -1;
};

// Throws InvalidArgument for bad terminals, PreconditionError when the graph
// has no perfect matching.
void validate_terminals(const MlpProblem& problem);
void validate_problem(const MlpProblem& problem);

// A matching covering every terminal exactly once. Sorted edges.
using Cover = std::vector<Edge>;

// Throws PreconditionError unless `cover` is an extendible terminal cover.
void validate_cover(const MlpProblem& problem, const Cover& cover);

// Every extendible cover, lexicographic on the sorted edge lists.
std::vector<Cover> enumerate_covers(const MlpProblem& problem);

struct CoveredProblem {
  MlpProblem problem;
  Cover cover;
};

// B - u - v + a2b1 where u a2 and v b1 are cover edges with u, v non-terminal.
CoveredProblem transform_4_to_3(const MlpProblem& problem, const Cover& cover);
// B - u - v + a1b2 where a2b1 is a cover edge and u a1, v b2 are cover edges
// with u, v non-terminal. A four-edge cover goes through transform_4_to_3
// first.
CoveredProblem transform_3_to_2(const MlpProblem& problem, const Cover& cover);

struct GadgetInstance {
  BipartiteGraph graph;
  Vertex a1 = -1, a2 = -1, b1 = -1, b2 = -1;
  Vertex x = -1;  // class 1, adjacent to y, b1, b2
  Vertex y = -1;  // class 2, adjacent to x, a1, a2
  std::array<Vertex, 4> cycle{};  // a1 y x b2
  std::array<Edge, 7> h_edges{};  // a1b2 a2b1 xy xb1 xb2 ya1 ya2
};

// Requires the cover {a1b2, a2b1}. The new vertices are the last of their
// classes; class-2 ids of the input shift up by one.
GadgetInstance build_final_instance(const MlpProblem& problem, const Cover& cover);

struct CoverTrace {
  Cover cover;
  std::string branch;               // "both-direct", "reach", "gadget", ...
  std::optional<bool> brace_verdict;  // K3,3 verdict of the located brace
  bool result = false;
};

bool solve_cover(const MlpProblem& problem, const Cover& cover, CoverTrace* trace = nullptr);

// True iff some extendible cover is solvable. Stops at the first yes; the
// trace lists every cover that was evaluated.
bool solve_2mlp(const MlpProblem& problem, std::vector<CoverTrace>* trace = nullptr);

}  // namespace bipmatch
