#include "mdirection.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "errors.hpp"

namespace bipmatch {

Digraph::Digraph(int node_count, std::vector<Arc> arcs) : n_(node_count), arcs_(std::move(arcs)) {
  if (node_count < 0) throw InvalidArgument("negative node count");
  for (const Arc& a : arcs_) {
    if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_)
      throw InvalidArgument("arc " + std::to_string(a.from) + " " + std::to_string(a.to) +
                            " references an unknown node");
    if (a.from == a.to) throw InvalidArgument("loop at node " + std::to_string(a.from));
  }
  std::sort(arcs_.begin(), arcs_.end());
  auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
  if (dup != arcs_.end())
    throw InvalidArgument("duplicate arc " + std::to_string(dup->from) + " " +
                          std::to_string(dup->to));
  out_.assign(n_, {});
  for (const Arc& a : arcs_) out_[a.from].push_back(a.to);
}

bool Digraph::has_arc(int from, int to) const {
  if (from < 0 || from >= n_) return false;
  return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

MDirection m_direction(const BipartiteGraph& graph, const Matching& perfect) {
  Matching m = perfect;
  validate_matching(graph, m);
  if (!is_perfect(graph, m)) throw PreconditionError("m_direction: matching is not perfect");

  MDirection out;
  out.node_of.assign(graph.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(m.edges.size()); ++i) {
    out.node_of[m.edges[i].u] = i;
    out.node_of[m.edges[i].v] = i;
  }
  std::vector<Arc> arcs;
  for (const Edge& e : graph.edges()) {
    if (m.contains(e)) continue;
    arcs.push_back({out.node_of[e.u], out.node_of[e.v]});
  }
  out.digraph = Digraph(static_cast<int>(m.edges.size()), std::move(arcs));
  out.matching = std::move(m);
  return out;
}

std::pair<BipartiteGraph, Matching> from_digraph(const Digraph& digraph) {
  const int n = digraph.node_count();
  std::vector<Edge> edges;
  Matching m;
  for (int u = 0; u < n; ++u) {
    edges.push_back({u, n + u});
    m.edges.push_back({u, n + u});
  }
  for (const Arc& a : digraph.arcs()) edges.push_back({a.from, n + a.to});
  return {BipartiteGraph(n, n, std::move(edges)), std::move(m)};
}

namespace {

// Iterative Tarjan. Emits components in reverse topological order.
class Tarjan {
 public:
  Tarjan(const Digraph& d, const std::vector<char>& removed) : d_(d), removed_(removed) {
    const int n = d.node_count();
    index_.assign(n, -1);
    low_.assign(n, 0);
    on_stack_.assign(n, 0);
    for (int s = 0; s < n; ++s)
      if (!removed_[s] && index_[s] < 0) run(s);
  }

  std::vector<std::vector<int>> take() { return std::move(components_); }

 private:
  void run(int root) {
    struct Frame {
      int node;
      std::size_t next;
    };
    std::vector<Frame> frames{{root, 0}};
    open(root);
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto succ = d_.successors(f.node);
      if (f.next < succ.size()) {
        int w = succ[f.next++];
        if (removed_[w]) continue;
        if (index_[w] < 0) {
          open(w);
          frames.push_back({w, 0});
        } else if (on_stack_[w]) {
          low_[f.node] = std::min(low_[f.node], index_[w]);
        }
        continue;
      }
      int v = f.node;
      frames.pop_back();
      if (!frames.empty()) low_[frames.back().node] = std::min(low_[frames.back().node], low_[v]);
      if (low_[v] == index_[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack_.back();
          stack_.pop_back();
          on_stack_[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components_.push_back(std::move(comp));
      }
    }
  }

  void open(int v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_[v] = 1;
  }

  const Digraph& d_;
  const std::vector<char>& removed_;
  std::vector<int> index_, low_;
  std::vector<char> on_stack_;
  std::vector<int> stack_;
  int counter_ = 0;
  std::vector<std::vector<int>> components_;
};

}  // namespace

std::vector<std::vector<int>> strong_components_without(const Digraph& digraph,
                                                        std::span<const int> removed) {
  std::vector<char> gone(digraph.node_count(), 0);
  for (int v : removed) gone.at(v) = 1;
  auto comps = Tarjan(digraph, gone).take();
  std::reverse(comps.begin(), comps.end());
  return comps;
}

std::vector<std::vector<int>> strong_components(const Digraph& digraph) {
  return strong_components_without(digraph, {});
}

bool is_strongly_connected(const Digraph& digraph) {
  return strong_components(digraph).size() <= 1;
}

std::vector<char> reachable_from(const Digraph& digraph, int source) {
  std::vector<char> seen(digraph.node_count(), 0);
  std::deque<int> queue{source};
  seen[source] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : digraph.successors(v))
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  return seen;
}

bool reach_internally_conformal(const BipartiteGraph& graph, const Matching& perfect, Vertex a,
                                Vertex b) {
  if (!graph.contains(a) || !graph.contains(b))
    throw InvalidArgument("reach_internally_conformal: unknown vertex");
  if (!graph.in_first_class(a) || graph.in_first_class(b))
    throw InvalidArgument("reach_internally_conformal: expected a in class 1 and b in class 2");
  MDirection md = m_direction(graph, perfect);
  return reachable_from(md.digraph, md.node_of[a])[md.node_of[b]] != 0;
}

}  // namespace bipmatch
