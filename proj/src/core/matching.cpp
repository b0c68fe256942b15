#include "matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

#include "errors.hpp"
#include "mdirection.hpp"

namespace bipmatch {
namespace {

class HopcroftKarp {
 public:
  HopcroftKarp(const BipartiteGraph& g, std::mt19937* rng) : g_(g) {
    const int n = g.vertex_count();
    mate_.assign(n, -1);
    dist_.assign(g.n1(), 0);
    order_.resize(g.n1());
    std::iota(order_.begin(), order_.end(), 0);
    adjacency_.resize(g.n1());
    for (Vertex u = 0; u < g.n1(); ++u) {
      auto nb = g.neighbours(u);
      adjacency_[u].assign(nb.begin(), nb.end());
    }
    if (rng) {
      std::shuffle(order_.begin(), order_.end(), *rng);
      for (auto& list : adjacency_) std::shuffle(list.begin(), list.end(), *rng);
    }
    while (bfs())
      for (Vertex u : order_)
        if (mate_[u] < 0) dfs(u);
  }

  const std::vector<Vertex>& mate() const { return mate_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::deque<Vertex> queue;
    for (Vertex u = 0; u < g_.n1(); ++u) {
      if (mate_[u] < 0) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : adjacency_[u]) {
        Vertex next = mate_[w];
        if (next < 0) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[u] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  bool dfs(Vertex u) {
    for (Vertex w : adjacency_[u]) {
      Vertex next = mate_[w];
      if (next < 0 || (dist_[next] == dist_[u] + 1 && dfs(next))) {
        mate_[u] = w;
        mate_[w] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<Vertex> mate_;
  std::vector<int> dist_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Kuhn-style augmentation on a graph with some vertices switched off.
class Augmenter {
 public:
  Augmenter(const BipartiteGraph& g, std::vector<Vertex>& mate, const std::vector<char>& removed)
      : g_(g), mate_(mate), removed_(removed), seen_(g.vertex_count(), 0) {}

  bool augment(Vertex u) {
    ++stamp_;
    return visit(u);
  }

 private:
  bool visit(Vertex u) {
    for (Vertex w : g_.neighbours(u)) {
      if (removed_[w] || seen_[w] == stamp_) continue;
      seen_[w] = stamp_;
      if (mate_[w] < 0 || visit(mate_[w])) {
        mate_[u] = w;
        mate_[w] = u;
        return true;
      }
    }
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<Vertex>& mate_;
  const std::vector<char>& removed_;
  std::vector<int> seen_;
  int stamp_ = 0;
};

// Calls f(subset) for every k-subset of [first, first + count).
template <typename F>
bool for_each_subset(int first, int count, int k, std::vector<Vertex>& subset, F&& f, int start = 0) {
  if (static_cast<int>(subset.size()) == k) return f(subset);
  for (int i = start; i < count; ++i) {
    subset.push_back(first + i);
    bool keep_going = for_each_subset(first, count, k, subset, f, i + 1);
    subset.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

bool extendible_side_conditions(const BipartiteGraph& g, int k) {
  if (k < 1) throw InvalidArgument("extendibility parameter must be >= 1");
  return g.n1() == g.n2() && g.vertex_count() >= 2 * k + 2 && is_connected(g);
}

}  // namespace

Matching max_matching(const BipartiteGraph& graph, std::mt19937* rng) {
  HopcroftKarp hk(graph, rng);
  return matching_from_mates(graph, hk.mate());
}

bool has_perfect_matching(const BipartiteGraph& graph) {
  return graph.n1() == graph.n2() && is_perfect(graph, max_matching(graph));
}

std::optional<Matching> perfect_matching(const BipartiteGraph& graph, std::mt19937* rng) {
  if (graph.n1() != graph.n2()) return std::nullopt;
  Matching m = max_matching(graph, rng);
  if (!is_perfect(graph, m)) return std::nullopt;
  return m;
}

std::optional<Matching> extend_to_perfect(const BipartiteGraph& graph, const Matching& forced) {
  Matching f = forced;
  validate_matching(graph, f);
  std::vector<Vertex> covered;
  for (const Edge& e : f.edges) {
    covered.push_back(e.u);
    covered.push_back(e.v);
  }
  Subgraph rest = remove_vertices(graph, covered);
  auto pm = perfect_matching(rest.graph);
  if (!pm) return std::nullopt;
  for (const Edge& e : pm->edges) f.edges.push_back({rest.to_old[e.u], rest.to_old[e.v]});
  std::sort(f.edges.begin(), f.edges.end());
  return f;
}

bool is_conformal_set(const BipartiteGraph& graph, std::span<const Vertex> vertices) {
  return has_perfect_matching(remove_vertices(graph, vertices).graph);
}

std::vector<Edge> admissible_edges(const BipartiteGraph& graph) {
  auto pm = perfect_matching(graph);
  if (!pm) throw PreconditionError("graph has no perfect matching");
  MDirection md = m_direction(graph, *pm);
  auto comps = strong_components(md.digraph);
  std::vector<int> comp_of(md.digraph.node_count(), -1);
  for (int i = 0; i < static_cast<int>(comps.size()); ++i)
    for (int node : comps[i]) comp_of[node] = i;
  std::vector<Edge> out;
  for (const Edge& e : graph.edges())
    if (pm->contains(e) || comp_of[md.node_of[e.u]] == comp_of[md.node_of[e.v]]) out.push_back(e);
  return out;
}

bool is_matching_covered(const BipartiteGraph& graph) {
  auto admissible = admissible_edges(graph);
  return static_cast<int>(admissible.size()) == graph.edge_count() && is_connected(graph);
}

std::vector<std::vector<Vertex>> elementary_components(const BipartiteGraph& graph) {
  return connected_components(with_edges(graph, admissible_edges(graph)));
}

Subgraph elementary_component_of(const BipartiteGraph& graph, Vertex v) {
  if (!graph.contains(v)) throw InvalidArgument("unknown vertex " + std::to_string(v));
  BipartiteGraph admissible = with_edges(graph, admissible_edges(graph));
  for (const auto& comp : connected_components(admissible))
    if (std::binary_search(comp.begin(), comp.end(), v)) return induced_subgraph(admissible, comp);
  throw StructuralAnomaly("vertex outside every elementary component");
}

bool is_extendible(const BipartiteGraph& graph, int k) {
  if (!extendible_side_conditions(graph, k)) return false;
  auto pm = perfect_matching(graph);
  if (!pm) return false;
  const std::vector<Vertex> base = mates(graph, *pm);
  const int n1 = graph.n1();
  const int n2 = graph.n2();
  std::vector<char> removed(graph.vertex_count(), 0);
  std::vector<Vertex> mate;
  for (int s = 1; s <= k; ++s) {
    std::vector<Vertex> s1;
    bool ok = for_each_subset(0, n1, s, s1, [&](const std::vector<Vertex>& first) {
      std::vector<Vertex> s2;
      return for_each_subset(n1, n2, s, s2, [&](const std::vector<Vertex>& second) {
        mate = base;
        for (Vertex v : first) removed[v] = 1;
        for (Vertex v : second) removed[v] = 1;
        for (Vertex v : first)
          if (!removed[mate[v]]) mate[mate[v]] = -1;
        for (Vertex v : second)
          if (!removed[mate[v]]) mate[mate[v]] = -1;
        bool all = true;
        Augmenter aug(graph, mate, removed);
        for (Vertex u = 0; u < n1 && all; ++u)
          if (!removed[u] && mate[u] < 0) all = aug.augment(u);
        for (Vertex v : first) removed[v] = 0;
        for (Vertex v : second) removed[v] = 0;
        return all;
      });
    });
    if (!ok) return false;
  }
  return true;
}

bool is_extendible_by_surplus(const BipartiteGraph& graph, int k) {
  if (!extendible_side_conditions(graph, k)) return false;
  const int n1 = graph.n1();
  if (n1 > 20 || graph.n2() > 64)
    throw CapacityError("surplus extendibility test limited to 20 vertices per class");
  std::vector<std::uint64_t> nb(n1, 0);
  for (const Edge& e : graph.edges()) nb[e.u] |= std::uint64_t{1} << (e.v - n1);
  const std::uint32_t full = (std::uint32_t{1} << n1) - 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int size = std::popcount(s);
    if (size > n1 - k) continue;
    std::uint64_t hood = 0;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) hood |= nb[std::countr_zero(rest)];
    if (std::popcount(hood) < size + k) return false;
  }
  return true;
}

}  // namespace bipmatch
