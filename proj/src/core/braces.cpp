#include "braces.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"
#include "matching.hpp"
#include "mdirection.hpp"

namespace bipmatch {
namespace {

std::vector<Vertex> normalized_shore(const BipartiteGraph& graph, std::span<const Vertex> shore) {
  std::vector<Vertex> x(shore.begin(), shore.end());
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  for (Vertex v : x)
    if (!graph.contains(v)) throw InvalidArgument("unknown vertex " + std::to_string(v) + " in shore");
  return x;
}

bool structural_tight(const BipartiteGraph& graph, const std::vector<Vertex>& x) {
  const int size = static_cast<int>(x.size());
  if (size % 2 == 0 || size >= graph.vertex_count()) return false;
  std::vector<char> inside(graph.vertex_count(), 0);
  int first = 0;
  for (Vertex v : x) {
    inside[v] = 1;
    if (graph.in_first_class(v)) ++first;
  }
  const int second = size - first;
  if (std::abs(first - second) != 1) return false;
  const bool minority_first = first < second;
  for (Vertex v : x) {
    if (graph.in_first_class(v) != minority_first) continue;
    for (Vertex w : graph.neighbours(v))
      if (!inside[w]) return false;
  }
  return true;
}

void require_matching_covered(const BipartiteGraph& graph) {
  if (!has_perfect_matching(graph) || !is_matching_covered(graph))
    throw PreconditionError("graph is not matching covered");
}

std::optional<TightCut> find_cut_unchecked(const BipartiteGraph& graph, std::mt19937* rng) {
  if (graph.vertex_count() < 6) return std::nullopt;
  auto pm = perfect_matching(graph, rng);
  if (!pm) throw PreconditionError("graph has no perfect matching");
  MDirection md = m_direction(graph, *pm);
  const Digraph& d = md.digraph;
  const auto& edges = md.matching.edges;

  std::vector<std::vector<Vertex>> candidates;
  std::vector<int> comp_of(d.node_count());
  for (int e = 0; e < d.node_count(); ++e) {
    const int removed[] = {e};
    auto comps = strong_components_without(d, removed);
    if (comps.size() < 2) continue;
    std::fill(comp_of.begin(), comp_of.end(), -1);
    for (int i = 0; i < static_cast<int>(comps.size()); ++i)
      for (int node : comps[i]) comp_of[node] = i;
    std::vector<char> has_out(comps.size(), 0), has_in(comps.size(), 0);
    for (const Arc& a : d.arcs()) {
      if (a.from == e || a.to == e || comp_of[a.from] == comp_of[a.to]) continue;
      has_out[comp_of[a.from]] = 1;
      has_in[comp_of[a.to]] = 1;
    }
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
      auto make_shore = [&](Vertex extra) {
        std::vector<Vertex> shore{extra};
        for (int node : comps[i]) {
          shore.push_back(edges[node].u);
          shore.push_back(edges[node].v);
        }
        std::sort(shore.begin(), shore.end());
        return shore;
      };
      if (!has_out[i]) candidates.push_back(make_shore(edges[e].v));
      if (rng && !has_in[i]) candidates.push_back(make_shore(edges[e].u));
    }
  }
  if (candidates.empty()) return std::nullopt;
  if (rng) {
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return TightCut{candidates[pick(*rng)]};
  }
  return TightCut{*std::min_element(candidates.begin(), candidates.end())};
}

// Shrinks `shrink` (a complement of a tight shore) to one vertex.
Contraction contract_set(const BipartiteGraph& graph, const std::vector<char>& in_shrink) {
  const int n = graph.vertex_count();
  int shrink_first = 0, shrink_second = 0;
  for (Vertex v = 0; v < n; ++v)
    if (in_shrink[v]) (graph.in_first_class(v) ? shrink_first : shrink_second)++;
  const bool new_in_first = shrink_first > shrink_second;

  Contraction out;
  std::vector<Vertex> to_new(n, -1);
  int n1 = 0;
  for (Vertex v = 0; v < graph.n1(); ++v)
    if (!in_shrink[v]) {
      to_new[v] = n1++;
      out.origin.push_back({{v}, false});
    }
  VertexOrigin record{{}, true};
  for (Vertex v = 0; v < n; ++v)
    if (in_shrink[v]) record.originals.push_back(v);
  if (new_in_first) {
    out.contracted_vertex = n1++;
    out.origin.push_back(record);
  }
  int n2 = 0;
  for (Vertex v = graph.n1(); v < n; ++v)
    if (!in_shrink[v]) {
      to_new[v] = n1 + n2++;
      out.origin.push_back({{v}, false});
    }
  if (!new_in_first) {
    out.contracted_vertex = n1 + n2++;
    out.origin.push_back(record);
  }
  for (Vertex v = 0; v < n; ++v)
    if (in_shrink[v]) to_new[v] = out.contracted_vertex;

  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    if (in_shrink[e.u] && in_shrink[e.v]) continue;
    Vertex a = to_new[e.u], b = to_new[e.v];
    if ((a < n1) == (b < n1)) throw StructuralAnomaly("contraction produced an intra-class edge");
    edges.push_back(a < n1 ? Edge{a, b} : Edge{b, a});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.graph = BipartiteGraph(n1, n2, std::move(edges));
  return out;
}

ContractionPair contract_unchecked(const BipartiteGraph& graph, const std::vector<Vertex>& shore) {
  std::vector<char> in_shore(graph.vertex_count(), 0);
  for (Vertex v : shore) in_shore[v] = 1;
  std::vector<char> outside(graph.vertex_count());
  for (Vertex v = 0; v < graph.vertex_count(); ++v) outside[v] = !in_shore[v];
  return {contract_set(graph, outside), contract_set(graph, in_shore)};
}

std::vector<VertexOrigin> compose(const std::vector<VertexOrigin>& parent,
                                  const std::vector<VertexOrigin>& child) {
  std::vector<VertexOrigin> out;
  out.reserve(child.size());
  for (const VertexOrigin& c : child) {
    if (!c.contracted) {
      out.push_back(parent[c.originals.front()]);
      continue;
    }
    VertexOrigin merged{{}, true};
    for (Vertex v : c.originals)
      merged.originals.insert(merged.originals.end(), parent[v].originals.begin(), parent[v].originals.end());
    std::sort(merged.originals.begin(), merged.originals.end());
    out.push_back(std::move(merged));
  }
  return out;
}

}  // namespace

bool is_trivial_shore(const BipartiteGraph& graph, std::span<const Vertex> shore) {
  auto x = normalized_shore(graph, shore);
  return x.size() <= 1 || static_cast<int>(x.size()) >= graph.vertex_count() - 1;
}

bool verify_tight_cut(const BipartiteGraph& graph, std::span<const Vertex> shore) {
  require_matching_covered(graph);
  return structural_tight(graph, normalized_shore(graph, shore));
}

std::optional<TightCut> find_nontrivial_tight_cut(const BipartiteGraph& graph, std::mt19937* rng) {
  require_matching_covered(graph);
  return find_cut_unchecked(graph, rng);
}

ContractionPair tight_cut_contract(const BipartiteGraph& graph, std::span<const Vertex> shore) {
  auto x = normalized_shore(graph, shore);
  if (x.size() < 3 || static_cast<int>(x.size()) > graph.vertex_count() - 3)
    throw InvalidArgument("tight_cut_contract: shore is trivial");
  if (!structural_tight(graph, x)) throw InvalidArgument("tight_cut_contract: not a tight shore");
  return contract_unchecked(graph, x);
}

std::vector<Brace> brace_decomposition(const BipartiteGraph& graph, std::mt19937* rng) {
  require_matching_covered(graph);
  std::vector<Brace> out;
  std::vector<VertexOrigin> identity;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) identity.push_back({{v}, false});
  std::vector<Brace> stack{{graph, std::move(identity)}};
  while (!stack.empty()) {
    Brace piece = std::move(stack.back());
    stack.pop_back();
    auto cut = find_cut_unchecked(piece.graph, rng);
    if (!cut) {
      out.push_back(std::move(piece));
      continue;
    }
    auto [first, second] = contract_unchecked(piece.graph, cut->shore);
    // Push second first so the kept shore is expanded before its complement.
    stack.push_back({std::move(second.graph), compose(piece.origin, second.origin)});
    stack.push_back({std::move(first.graph), compose(piece.origin, first.origin)});
  }
  return out;
}

bool is_brace(const BipartiteGraph& graph) {
  if (graph.n1() == 2 && graph.n2() == 2 && graph.edge_count() == 4) return true;
  return is_extendible(graph, 2);
}

bool is_brace_by_tight_cuts(const BipartiteGraph& graph) {
  if (graph.vertex_count() < 4 || !has_perfect_matching(graph) || !is_matching_covered(graph))
    return false;
  return !find_cut_unchecked(graph, nullptr).has_value();
}

std::string provenance_table(const Brace& brace) {
  std::ostringstream out;
  for (std::size_t v = 0; v < brace.origin.size(); ++v) {
    const VertexOrigin& o = brace.origin[v];
    out << v << " -> ";
    if (!o.contracted) {
      out << o.originals.front();
    } else {
      out << "C:{";
      for (std::size_t i = 0; i < o.originals.size(); ++i) out << (i ? "," : "") << o.originals[i];
      out << '}';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace bipmatch
