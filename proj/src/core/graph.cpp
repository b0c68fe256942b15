#include "graph.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace bipmatch {

BipartiteGraph::BipartiteGraph(int n1, int n2, std::vector<Edge> edges)
    : n1_(n1), n2_(n2), edges_(std::move(edges)) {
  if (n1 < 0 || n2 < 0) throw InvalidArgument("negative class size");
  const int n = n1 + n2;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InvalidArgument("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                            " references an unknown vertex");
    if ((e.u < n1) == (e.v < n1))
      throw InvalidArgument("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                            " joins two vertices of the same class");
  }
  for (Edge& e : edges_)
    if (e.u >= n1) std::swap(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw InvalidArgument("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));

  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool BipartiteGraph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

int BipartiteGraph::edge_index(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b) || in_first_class(a) == in_first_class(b)) return -1;
  Edge e = a < n1_ ? Edge{a, b} : Edge{b, a};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

Edge make_edge(const BipartiteGraph& graph, Vertex a, Vertex b) {
  if (!graph.contains(a) || !graph.contains(b))
    throw InvalidArgument("unknown vertex in edge " + std::to_string(a) + " " + std::to_string(b));
  if (graph.in_first_class(a) == graph.in_first_class(b))
    throw InvalidArgument("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                          " are in the same class");
  return graph.in_first_class(a) ? Edge{a, b} : Edge{b, a};
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

void validate_matching(const BipartiteGraph& graph, Matching& matching) {
  std::vector<char> used(graph.vertex_count(), 0);
  for (Edge& e : matching.edges) {
    e = make_edge(graph, e.u, e.v);
    if (!graph.has_edge(e.u, e.v))
      throw InvalidArgument("matching edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                            " is not an edge of the graph");
    if (used[e.u] || used[e.v])
      throw InvalidArgument("matching edges share vertex in " + std::to_string(e.u) + " " +
                            std::to_string(e.v));
    used[e.u] = used[e.v] = 1;
  }
  std::sort(matching.edges.begin(), matching.edges.end());
}

bool is_perfect(const BipartiteGraph& graph, const Matching& matching) {
  return graph.n1() == graph.n2() && static_cast<int>(matching.size()) == graph.n1();
}

std::vector<Vertex> mates(const BipartiteGraph& graph, const Matching& matching) {
  std::vector<Vertex> mate(graph.vertex_count(), -1);
  for (const Edge& e : matching.edges) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

Matching matching_from_mates(const BipartiteGraph& graph, std::span<const Vertex> mate) {
  Matching m;
  for (Vertex u = 0; u < graph.n1(); ++u)
    if (mate[u] >= 0) m.edges.push_back({u, mate[u]});
  return m;
}

Subgraph induced_subgraph(const BipartiteGraph& graph, std::span<const Vertex> keep) {
  std::vector<char> kept(graph.vertex_count(), 0);
  for (Vertex v : keep) {
    if (!graph.contains(v)) throw InvalidArgument("unknown vertex " + std::to_string(v));
    kept[v] = 1;
  }
  Subgraph out;
  out.to_new.assign(graph.vertex_count(), -1);
  int n1 = 0;
  for (Vertex v = 0; v < graph.n1(); ++v)
    if (kept[v]) {
      out.to_new[v] = n1++;
      out.to_old.push_back(v);
    }
  int n2 = 0;
  for (Vertex v = graph.n1(); v < graph.vertex_count(); ++v)
    if (kept[v]) {
      out.to_new[v] = n1 + n2++;
      out.to_old.push_back(v);
    }
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges())
    if (kept[e.u] && kept[e.v]) edges.push_back({out.to_new[e.u], out.to_new[e.v]});
  out.graph = BipartiteGraph(n1, n2, std::move(edges));
  return out;
}

Subgraph remove_vertices(const BipartiteGraph& graph, std::span<const Vertex> removed) {
  std::vector<char> gone(graph.vertex_count(), 0);
  for (Vertex v : removed) {
    if (!graph.contains(v)) throw InvalidArgument("unknown vertex " + std::to_string(v));
    gone[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < graph.vertex_count(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(graph, keep);
}

BipartiteGraph with_edges(const BipartiteGraph& graph, std::vector<Edge> edges) {
  return BipartiteGraph(graph.n1(), graph.n2(), std::move(edges));
}

std::vector<std::vector<Vertex>> connected_components(const BipartiteGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (Vertex w : graph.neighbours(v))
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const BipartiteGraph& graph) {
  return graph.vertex_count() > 0 && connected_components(graph).size() == 1;
}

BipartiteGraph relabel(const BipartiteGraph& graph, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != graph.vertex_count())
    throw InvalidArgument("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(graph.edges().size());
  for (const Edge& e : graph.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return BipartiteGraph(graph.n1(), graph.n2(), std::move(edges));
}

BipartiteGraph transpose(const BipartiteGraph& graph) {
  const int n1 = graph.n1();
  const int n2 = graph.n2();
  std::vector<Edge> edges;
  edges.reserve(graph.edges().size());
  // old class 2 vertex n1 + j becomes new class 1 vertex j; old class 1 vertex
  // i becomes new class 2 vertex n2 + i.
  for (const Edge& e : graph.edges()) edges.push_back({e.v - n1, n2 + e.u});
  return BipartiteGraph(n2, n1, std::move(edges));
}

BipartiteGraph complete_bipartite(int p, int q) {
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) edges.push_back({i, p + j});
  return BipartiteGraph(p, q, std::move(edges));
}

Vertex even_cycle_vertex(int length, int position) {
  const int half = length / 2;
  position %= length;
  return position % 2 == 0 ? position / 2 : half + (position - 1) / 2;
}

BipartiteGraph even_cycle(int length) {
  if (length < 4 || length % 2 != 0) throw InvalidArgument("cycle length must be even and >= 4");
  std::vector<Edge> edges;
  for (int i = 0; i < length; ++i) {
    Vertex a = even_cycle_vertex(length, i);
    Vertex b = even_cycle_vertex(length, i + 1);
    edges.push_back(a < length / 2 ? Edge{a, b} : Edge{b, a});
  }
  return BipartiteGraph(length / 2, length / 2, std::move(edges));
}

BipartiteGraph even_path(int vertex_count) {
  if (vertex_count < 2 || vertex_count % 2 != 0)
    throw InvalidArgument("path vertex count must be even and >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < vertex_count; ++i) {
    Vertex a = even_cycle_vertex(vertex_count, i);
    Vertex b = even_cycle_vertex(vertex_count, i + 1);
    edges.push_back(a < vertex_count / 2 ? Edge{a, b} : Edge{b, a});
  }
  return BipartiteGraph(vertex_count / 2, vertex_count / 2, std::move(edges));
}

}  // namespace bipmatch
