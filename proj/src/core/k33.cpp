#include "k33.hpp"

#include <algorithm>

#include "braces.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "isomorphism.hpp"
#include "planarity.hpp"

namespace bipmatch {
namespace {

// Articulation data of the graph with some vertices switched off: the number
// of components, and for every live vertex how many components its own
// component falls into once it is removed.
class Pieces {
 public:
  Pieces(const BipartiteGraph& g, const std::vector<char>& removed)
      : g_(g), removed_(removed), disc_(g.vertex_count()), low_(g.vertex_count()),
        pieces_(g.vertex_count()) {}

  // Recomputes everything for the current contents of `removed`.
  void run() {
    std::fill(disc_.begin(), disc_.end(), -1);
    std::fill(pieces_.begin(), pieces_.end(), 0);
    timer_ = components_ = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (removed_[v] || disc_[v] >= 0) continue;
      ++components_;
      int children = 0;
      disc_[v] = low_[v] = timer_++;
      for (Vertex w : g_.neighbours(v)) {
        if (removed_[w] || disc_[w] >= 0) continue;
        ++children;
        visit(w, v);
      }
      pieces_[v] = children;
    }
  }

  int components() const { return components_; }
  int components_without(Vertex v) const { return components_ - 1 + pieces_[v]; }

 private:
  void visit(Vertex v, Vertex parent) {
    disc_[v] = low_[v] = timer_++;
    pieces_[v] = 1;
    for (Vertex w : g_.neighbours(v)) {
      if (removed_[w] || w == parent) continue;
      if (disc_[w] >= 0) {
        low_[v] = std::min(low_[v], disc_[w]);
        continue;
      }
      visit(w, v);
      low_[v] = std::min(low_[v], low_[w]);
      if (low_[w] >= disc_[v]) ++pieces_[v];
    }
  }

  const BipartiteGraph& g_;
  const std::vector<char>& removed_;
  std::vector<int> disc_, low_, pieces_;
  int timer_ = 0;
  int components_ = 0;
};

std::optional<SplittingSet> splitting_set_unchecked(const BipartiteGraph& g) {
  const int n1 = g.n1();
  const int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  Pieces pieces(g, removed);
  for (Vertex a1 = 0; a1 < n1; ++a1)
    for (Vertex a2 = a1 + 1; a2 < n1; ++a2)
      for (Vertex b1 = n1; b1 < n; ++b1) {
        removed[a1] = removed[a2] = removed[b1] = 1;
        pieces.run();
        Vertex found = -1;
        for (Vertex b2 = b1 + 1; b2 < n && found < 0; ++b2)
          if (pieces.components_without(b2) >= 2) found = b2;
        removed[a1] = removed[a2] = removed[b1] = 0;
        if (found < 0) continue;
        SplittingSet split{a1, a2, b1, found, {}};
        const Vertex s[] = {a1, a2, b1, found};
        Subgraph rest = remove_vertices(g, s);
        for (auto comp : connected_components(rest.graph)) {
          for (Vertex& v : comp) v = rest.to_old[v];
          std::sort(comp.begin(), comp.end());
          split.components.push_back(std::move(comp));
        }
        std::sort(split.components.begin(), split.components.end());
        return split;
      }
  return std::nullopt;
}

bool recurse(const BipartiteGraph& g) {
  if (is_planar(g)) return false;
  if (is_heawood(g)) return false;
  auto split = splitting_set_unchecked(g);
  if (!split) return true;
  auto summands = splitting_summands(g, *split);
  // Summand brace test through tight cuts: O(V E) instead of the O(V^4)
  // augmentations of the extendibility test; both agree (tested).
  for (const auto& summand : summands)
    if (!is_brace_by_tight_cuts(summand)) {
      if (is_isomorphic(g, generate(NamedGraphKind::T10)))
        throw StructuralAnomaly("T10 reached the recognizer as a brace");
      throw StructuralAnomaly("splitting set produced a summand that is not a brace");
    }
  for (const auto& summand : summands)
    if (recurse(summand)) return true;
  return false;
}

}  // namespace

bool is_heawood(const BipartiteGraph& graph) {
  if (graph.vertex_count() != 14 || graph.edge_count() != 21) return false;
  return is_isomorphic(graph, generate(NamedGraphKind::Heawood));
}

std::optional<SplittingSet> find_splitting_set(const BipartiteGraph& graph) {
  if (!is_brace(graph)) throw PreconditionError("find_splitting_set: graph is not a brace");
  return splitting_set_unchecked(graph);
}

std::vector<BipartiteGraph> splitting_summands(const BipartiteGraph& graph, const SplittingSet& split) {
  std::vector<BipartiteGraph> out;
  for (const auto& comp : split.components) {
    std::vector<Vertex> keep = comp;
    keep.insert(keep.end(), {split.a1, split.a2, split.b1, split.b2});
    Subgraph sub = induced_subgraph(graph, keep);
    std::vector<Edge> edges = sub.graph.edges();
    for (Vertex a : {split.a1, split.a2})
      for (Vertex b : {split.b1, split.b2}) edges.push_back({sub.to_new[a], sub.to_new[b]});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.emplace_back(sub.graph.n1(), sub.graph.n2(), std::move(edges));
  }
  return out;
}

bool brace_contains_k33(const BipartiteGraph& graph) {
  if (!is_brace(graph)) throw PreconditionError("brace_contains_k33: graph is not a brace");
  return recurse(graph);
}

bool brace_contains_k33_unchecked(const BipartiteGraph& graph) { return recurse(graph); }

bool contains_k33(const BipartiteGraph& graph) {
  for (const Brace& brace : brace_decomposition(graph))
    if (recurse(brace.graph)) return true;
  return false;
}

}  // namespace bipmatch
