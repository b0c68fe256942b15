#include "mlp.hpp"

#include <algorithm>

#include "braces.hpp"
#include "errors.hpp"
#include "k33.hpp"
#include "matching.hpp"
#include "mdirection.hpp"

namespace bipmatch {
namespace {

bool is_terminal(const MlpProblem& p, Vertex v) { return v == p.a1 || v == p.a2 || v == p.b1 || v == p.b2; }

bool in_cover(const Cover& cover, Edge e) { return std::binary_search(cover.begin(), cover.end(), e); }

// The cover edge at terminal t, and the other end of it.
Edge cover_edge_at(const Cover& cover, Vertex t) {
  for (const Edge& e : cover)
    if (e.u == t || e.v == t) return e;
  throw PreconditionError("terminal " + std::to_string(t) + " is not covered");
}

Vertex other_end(const Edge& e, Vertex t) { return e.u == t ? e.v : e.u; }

// Deletes u and v, drops the cover edges r1 and r2, and adds the edge pq to
// both the graph and the cover.
CoveredProblem shrink(const MlpProblem& p, const Cover& cover, Vertex u, Vertex v, Edge r1, Edge r2,
                      Vertex a, Vertex b) {
  const Vertex gone[] = {u, v};
  Subgraph sub = remove_vertices(p.graph, gone);
  const Edge added{sub.to_new[a], sub.to_new[b]};
  std::vector<Edge> edges = sub.graph.edges();
  if (!sub.graph.has_edge(added.u, added.v)) edges.push_back(added);

  CoveredProblem out;
  out.problem.graph = BipartiteGraph(sub.graph.n1(), sub.graph.n2(), std::move(edges));
  out.problem.a1 = sub.to_new[p.a1];
  out.problem.a2 = sub.to_new[p.a2];
  out.problem.b1 = sub.to_new[p.b1];
  out.problem.b2 = sub.to_new[p.b2];
  for (const Edge& e : cover)
    if (e != r1 && e != r2) out.cover.push_back({sub.to_new[e.u], sub.to_new[e.v]});
  out.cover.push_back(added);
  std::sort(out.cover.begin(), out.cover.end());
  return out;
}

MlpProblem swap_pairs(const MlpProblem& p) { return {p.graph, p.a2, p.a1, p.b2, p.b1}; }

bool gadget_branch(const MlpProblem& problem, const Cover& cover, CoverTrace* trace) {
  CoveredProblem state{problem, cover};
  if (state.cover.size() == 4) state = transform_4_to_3(state.problem, state.cover);
  if (state.cover.size() == 3) {
    const MlpProblem& p = state.problem;
    // The one direct edge must be a2b1 for the 3-to-2 step; a1b2 is the same
    // situation with the two terminal pairs exchanged.
    if (!in_cover(state.cover, {p.a2, p.b1})) state.problem = swap_pairs(p);
    state = transform_3_to_2(state.problem, state.cover);
  }
  GadgetInstance inst = build_final_instance(state.problem, state.cover);

  auto admissible = admissible_edges(inst.graph);
  for (const Edge& e : inst.h_edges)
    if (!std::binary_search(admissible.begin(), admissible.end(), e)) {
      if (trace) trace->branch = "gadget-inadmissible";
      return false;
    }

  BipartiteGraph admissible_graph = with_edges(inst.graph, std::move(admissible));
  std::vector<Vertex> component;
  for (auto& comp : connected_components(admissible_graph))
    if (std::binary_search(comp.begin(), comp.end(), inst.x)) component = std::move(comp);
  Subgraph elementary = induced_subgraph(admissible_graph, component);

  const std::array<Vertex, 6> h_vertices{inst.a1, inst.a2, inst.x, inst.b1, inst.b2, inst.y};
  for (const Brace& brace : brace_decomposition(elementary.graph)) {
    // The vertex sets of a brace partition the decomposed graph; every
    // original vertex is represented by itself or by a contraction record.
    std::vector<Vertex> image(elementary.graph.vertex_count(), -1);
    for (Vertex w = 0; w < static_cast<int>(brace.origin.size()); ++w)
      for (Vertex v : brace.origin[w].originals) image[v] = w;
    auto locate = [&](Vertex v) { return image[elementary.to_new[v]]; };
    std::vector<Vertex> images;
    for (Vertex v : h_vertices) images.push_back(locate(v));
    std::sort(images.begin(), images.end());
    bool holds = std::adjacent_find(images.begin(), images.end()) == images.end();
    for (std::size_t i = 0; holds && i < inst.h_edges.size(); ++i)
      holds = brace.graph.has_edge(locate(inst.h_edges[i].u), locate(inst.h_edges[i].v));
    if (!holds) continue;
    const bool verdict = brace_contains_k33_unchecked(brace.graph);
    if (trace) {
      trace->branch = "gadget";
      trace->brace_verdict = verdict;
    }
    return verdict;
  }
  // H is split by a tight cut, so no brace holds C with a cross over it.
  if (trace) trace->branch = "gadget-no-brace";
  return false;
}

}  // namespace

void validate_terminals(const MlpProblem& p) {
  const auto& g = p.graph;
  for (Vertex t : {p.a1, p.a2, p.b1, p.b2})
    if (!g.contains(t)) throw InvalidArgument("terminal " + std::to_string(t) + " is not a vertex");
  if (!g.in_first_class(p.a1) || !g.in_first_class(p.a2))
    throw InvalidArgument("a1 and a2 must lie in class 1");
  if (g.in_first_class(p.b1) || g.in_first_class(p.b2)) throw InvalidArgument("b1 and b2 must lie in class 2");
  if (p.a1 == p.a2 || p.b1 == p.b2) throw InvalidArgument("terminals must be distinct");
}

void validate_problem(const MlpProblem& p) {
  validate_terminals(p);
  if (!has_perfect_matching(p.graph)) throw PreconditionError("graph has no perfect matching");
}

void validate_cover(const MlpProblem& p, const Cover& cover) {
  Matching m{cover};
  try {
    validate_matching(p.graph, m);
  } catch (const InvalidArgument& e) {
    throw PreconditionError(std::string("cover: ") + e.what());
  }
  std::vector<Vertex> ends;
  for (const Edge& e : m.edges) {
    if (!is_terminal(p, e.u) && !is_terminal(p, e.v)) throw PreconditionError("cover edge misses every terminal");
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  for (Vertex t : {p.a1, p.a2, p.b1, p.b2})
    if (std::find(ends.begin(), ends.end(), t) == ends.end())
      throw PreconditionError("terminal " + std::to_string(t) + " is not covered");
  if (!is_conformal_set(p.graph, ends)) throw PreconditionError("cover does not extend to a perfect matching");
}

std::vector<Cover> enumerate_covers(const MlpProblem& p) {
  // No perfect matching simply means no extendible cover.
  validate_terminals(p);
  const auto& g = p.graph;
  const std::array<Vertex, 4> terminals{p.a1, p.a2, p.b1, p.b2};
  std::vector<char> covered(g.vertex_count(), 0);
  std::vector<Cover> out;
  Cover current;
  std::vector<Vertex> ends;

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == terminals.size()) {
      ends.clear();
      for (const Edge& e : current) {
        ends.push_back(e.u);
        ends.push_back(e.v);
      }
      if (is_conformal_set(g, ends)) {
        Cover f = current;
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
      }
      return;
    }
    const Vertex t = terminals[i];
    if (covered[t]) {
      self(self, i + 1);
      return;
    }
    for (Vertex w : g.neighbours(t)) {
      if (covered[w]) continue;
      covered[t] = covered[w] = 1;
      current.push_back(make_edge(g, t, w));
      self(self, i + 1);
      current.pop_back();
      covered[t] = covered[w] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

CoveredProblem transform_4_to_3(const MlpProblem& p, const Cover& cover) {
  if (cover.size() != 4) throw PreconditionError("transform_4_to_3 needs a four-edge cover");
  const Edge ea = cover_edge_at(cover, p.a2);
  const Edge eb = cover_edge_at(cover, p.b1);
  const Vertex u = other_end(ea, p.a2);
  const Vertex v = other_end(eb, p.b1);
  if (is_terminal(p, u) || is_terminal(p, v)) throw PreconditionError("transform_4_to_3: partner is a terminal");
  return shrink(p, cover, u, v, ea, eb, p.a2, p.b1);
}

CoveredProblem transform_3_to_2(const MlpProblem& p, const Cover& cover) {
  if (cover.size() == 4) {
    CoveredProblem mid = transform_4_to_3(p, cover);
    return transform_3_to_2(mid.problem, mid.cover);
  }
  if (cover.size() != 3 || !in_cover(cover, {p.a2, p.b1}))
    throw PreconditionError("transform_3_to_2 needs a three-edge cover containing a2b1");
  const Edge ea = cover_edge_at(cover, p.a1);
  const Edge eb = cover_edge_at(cover, p.b2);
  const Vertex u = other_end(ea, p.a1);
  const Vertex v = other_end(eb, p.b2);
  if (is_terminal(p, u) || is_terminal(p, v)) throw PreconditionError("transform_3_to_2: partner is a terminal");
  return shrink(p, cover, u, v, ea, eb, p.a1, p.b2);
}

GadgetInstance build_final_instance(const MlpProblem& p, const Cover& cover) {
  Cover want{{p.a1, p.b2}, {p.a2, p.b1}};
  std::sort(want.begin(), want.end());
  Cover have = cover;
  std::sort(have.begin(), have.end());
  if (have != want) throw PreconditionError("final instance needs the cover {a1b2, a2b1}");

  const auto& g = p.graph;
  const int n1 = g.n1();
  auto shift = [&](Vertex v) { return v < n1 ? v : v + 1; };
  GadgetInstance inst;
  inst.a1 = p.a1;
  inst.a2 = p.a2;
  inst.b1 = shift(p.b1);
  inst.b2 = shift(p.b2);
  inst.x = n1;
  inst.y = g.vertex_count() + 1;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, shift(e.v)});
  inst.h_edges = {Edge{inst.a1, inst.b2}, Edge{inst.a2, inst.b1}, Edge{inst.x, inst.y}, Edge{inst.x, inst.b1},
                  Edge{inst.x, inst.b2},  Edge{inst.a1, inst.y},  Edge{inst.a2, inst.y}};
  for (std::size_t i = 2; i < inst.h_edges.size(); ++i) edges.push_back(inst.h_edges[i]);
  inst.graph = BipartiteGraph(n1 + 1, g.n2() + 1, std::move(edges));
  inst.cycle = {inst.a1, inst.y, inst.x, inst.b2};
  return inst;
}

namespace {

bool solve_valid_cover(const MlpProblem& p, const Cover& cover, CoverTrace* trace) {
  if (trace) {
    *trace = CoverTrace{};
    trace->cover = cover;
  }
  const bool first_direct = in_cover(cover, {p.a1, p.b1});
  const bool second_direct = in_cover(cover, {p.a2, p.b2});
  bool result;
  if (first_direct && second_direct) {
    if (trace) trace->branch = "direct";
    result = true;
  } else if (first_direct || second_direct) {
    // One pair is already linked by its cover edge; the other needs an
    // internally conformal path avoiding it, which is a reachability query.
    const Vertex a = first_direct ? p.a1 : p.a2;
    const Vertex b = first_direct ? p.b1 : p.b2;
    const Vertex s = first_direct ? p.a2 : p.a1;
    const Vertex t = first_direct ? p.b2 : p.b1;
    auto pm = extend_to_perfect(p.graph, Matching{cover});
    if (!pm) throw PreconditionError("cover does not extend to a perfect matching");
    const Vertex gone[] = {a, b};
    Subgraph rest = remove_vertices(p.graph, gone);
    Matching m;
    for (const Edge& e : pm->edges)
      if (e != Edge{a, b}) m.edges.push_back({rest.to_new[e.u], rest.to_new[e.v]});
    std::sort(m.edges.begin(), m.edges.end());
    if (trace) trace->branch = "reach";
    result = reach_internally_conformal(rest.graph, m, rest.to_new[s], rest.to_new[t]);
  } else {
    result = gadget_branch(p, cover, trace);
  }
  if (trace) trace->result = result;
  return result;
}

}  // namespace

bool solve_cover(const MlpProblem& p, const Cover& cover_in, CoverTrace* trace) {
  validate_problem(p);
  Cover cover = cover_in;
  std::sort(cover.begin(), cover.end());
  validate_cover(p, cover);
  return solve_valid_cover(p, cover, trace);
}

bool solve_2mlp(const MlpProblem& p, std::vector<CoverTrace>* trace) {
  validate_problem(p);
  for (const Cover& cover : enumerate_covers(p)) {
    CoverTrace local;
    const bool yes = solve_valid_cover(p, cover, trace ? &local : nullptr);
    if (trace) trace->push_back(std::move(local));
    if (yes) return true;
  }
  return false;
}

}  // namespace bipmatch
