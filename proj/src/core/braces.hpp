#pragma once

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace bipmatch {

// A shore X of a tight cut. Sorted vertex ids of the host graph.
struct TightCut {
  std::vector<Vertex> shore;
};

// Where a vertex of a contracted graph came from: a single vertex of the
// source graph, or a contraction record holding every identified vertex.
struct VertexOrigin {
  std::vector<Vertex> originals;  // sorted
  bool contracted = false;

  friend bool operator==(const VertexOrigin&, const VertexOrigin&) = default;
};

// Structural tight-cut test for matching covered graphs: |X| odd, majority
// exceeds minority by exactly one, and every neighbour of the minority lies in
// X. Singleton shores (and complements of singletons) pass and are trivial.
// Throws PreconditionError if the graph is not matching covered.
bool verify_tight_cut(const BipartiteGraph& graph, std::span<const Vertex> shore);
bool is_trivial_shore(const BipartiteGraph& graph, std::span<const Vertex> shore);

// Finds a non-trivial tight cut, or nullopt iff the graph is a brace. Fixes a
// perfect matching M; for each M-edge e = ab (ascending), if the M-direction
// minus node(e) is not strongly connected, every sink component K gives the
// shore {both ends of the M-edges in K} + {b}. The lexicographically smallest
// candidate is returned. With `rng` the matching and the chosen candidate
// (sinks and, symmetrically, sources) are random instead.
// Throws PreconditionError if the graph is not matching covered.
std::optional<TightCut> find_nontrivial_tight_cut(const BipartiteGraph& graph,
                                                  std::mt19937* rng = nullptr);

struct Contraction {
  BipartiteGraph graph;
  std::vector<VertexOrigin> origin;  // relative to the contracted graph's source
  Vertex contracted_vertex = -1;
};

// The two tight cut contractions: `first` keeps X and shrinks its complement
// to one vertex (of the complement's majority class), `second` keeps the
// complement and shrinks X. Kept vertices retain their relative order; the
// new vertex is the last of its class. Throws InvalidArgument unless X is a
// non-trivial tight shore.
struct ContractionPair {
  Contraction first;
  Contraction second;
};
ContractionPair tight_cut_contract(const BipartiteGraph& graph, std::span<const Vertex> shore);

struct Brace {
  BipartiteGraph graph;
  std::vector<VertexOrigin> origin;  // relative to the decomposed graph
};

// Recursively splits along non-trivial tight cuts until every piece is a
// brace. Throws PreconditionError if the graph is not matching covered.
std::vector<Brace> brace_decomposition(const BipartiteGraph& graph, std::mt19937* rng = nullptr);

// C4, or 2-extendible.
bool is_brace(const BipartiteGraph& graph);
// Matching covered on at least four vertices and without a non-trivial tight
// cut; agrees with is_brace.
bool is_brace_by_tight_cuts(const BipartiteGraph& graph);

// "id -> original" table, one line per vertex, contraction records as C:{..}.
std::string provenance_table(const Brace& brace);

}  // namespace bipmatch
