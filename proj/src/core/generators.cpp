#include "generators.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"
#include "matching.hpp"

namespace bipmatch {

std::optional<NamedGraphKind> named_graph_from_string(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "c4") return NamedGraphKind::C4;
  if (lower == "k33") return NamedGraphKind::K33;
  if (lower == "cube") return NamedGraphKind::Cube;
  if (lower == "heawood") return NamedGraphKind::Heawood;
  if (lower == "rotunda") return NamedGraphKind::Rotunda;
  if (lower == "t10") return NamedGraphKind::T10;
  if (lower == "moebius" || lower == "mobius") return NamedGraphKind::MoebiusLadder;
  return std::nullopt;
}

std::string to_string(NamedGraphKind kind) {
  switch (kind) {
    case NamedGraphKind::C4: return "c4";
    case NamedGraphKind::K33: return "k33";
    case NamedGraphKind::Cube: return "cube";
    case NamedGraphKind::Heawood: return "heawood";
    case NamedGraphKind::Rotunda: return "rotunda";
    case NamedGraphKind::T10: return "t10";
    case NamedGraphKind::MoebiusLadder: return "moebius";
  }
  return "?";
}

namespace {

BipartiteGraph cube() {
  // Class index of every 3-bit word.
  std::array<Vertex, 8> id{};
  int even = 0;
  int odd = 4;
  for (int w : {0b000, 0b011, 0b101, 0b110}) id[w] = even++;
  for (int w : {0b001, 0b010, 0b100, 0b111}) id[w] = odd++;
  std::vector<Edge> edges;
  for (int w : {0b000, 0b011, 0b101, 0b110})
    for (int bit = 0; bit < 3; ++bit) edges.push_back({id[w], id[w ^ (1 << bit)]});
  return BipartiteGraph(4, 4, std::move(edges));
}

BipartiteGraph heawood() {
  std::vector<Edge> edges;
  for (int line = 0; line < 7; ++line)
    for (int offset : {0, 1, 3}) edges.push_back({(line + offset) % 7, 7 + line});
  return BipartiteGraph(7, 7, std::move(edges));
}

BipartiteGraph moebius_ladder(int k) {
  if (k < 1) throw InvalidArgument("Moebius ladder parameter must be >= 1");
  const int n = 4 * k + 2;
  const BipartiteGraph rim = even_cycle(n);
  std::vector<Edge> edges = rim.edges();
  for (int i = 0; i < n / 2; ++i)
    edges.push_back(make_edge(rim, even_cycle_vertex(n, i), even_cycle_vertex(n, i + n / 2)));
  return BipartiteGraph(n / 2, n / 2, std::move(edges));
}

}  // namespace

BipartiteGraph generate(const NamedGraph& name) {
  switch (name.kind) {
    case NamedGraphKind::C4: return complete_bipartite(2, 2);
    case NamedGraphKind::K33: return complete_bipartite(3, 3);
    case NamedGraphKind::Cube: return cube();
    case NamedGraphKind::Heawood: return heawood();
    case NamedGraphKind::Rotunda: {
      SumPart part{cube(), kCubeSumCycle};
      return four_cycle_sum({part, part, part}, {});
    }
    case NamedGraphKind::T10: {
      SumPart part{complete_bipartite(3, 3), kK33SumCycle};
      return four_cycle_sum({part, part, part}, {});
    }
    case NamedGraphKind::MoebiusLadder: return moebius_ladder(name.k);
  }
  throw InvalidArgument("unknown named graph");
}

BipartiteGraph four_cycle_sum(const std::vector<SumPart>& parts, const std::vector<int>& keep_edges) {
  if (parts.size() < 2) throw InvalidArgument("a 4-cycle sum needs at least two parts");
  for (int idx : keep_edges)
    if (idx < 0 || idx > 3) throw InvalidArgument("cycle edge index must be in 0..3");

  int n1 = 2;
  int n2 = 2;
  // Per part: old vertex -> new id.
  std::vector<std::vector<Vertex>> maps;
  for (const SumPart& part : parts) {
    const BipartiteGraph& g = part.graph;
    const auto& c = part.cycle;
    for (int i = 0; i < 4; ++i) {
      if (!g.contains(c[i])) throw InvalidArgument("cycle vertex outside its part");
      if (g.in_first_class(c[i]) != (i % 2 == 0))
        throw InvalidArgument("cycle correspondence is not class-preserving");
      if (!g.has_edge(c[i], c[(i + 1) % 4])) throw InvalidArgument("designated vertices are not a 4-cycle");
    }
    if (c[0] == c[2] || c[1] == c[3]) throw InvalidArgument("designated vertices are not a 4-cycle");
    if (!is_conformal_set(g, c)) throw PreconditionError("designated 4-cycle is not conformal");
    std::vector<Vertex> map(g.vertex_count(), -1);
    map[c[0]] = 0;
    map[c[2]] = 1;
    for (Vertex v = 0; v < g.n1(); ++v)
      if (map[v] < 0) map[v] = n1++;
    maps.push_back(std::move(map));
  }
  // Class-2 ids are offset by the final n1, so assign them in a second pass.
  for (std::size_t p = 0; p < parts.size(); ++p) {
    maps[p][parts[p].cycle[1]] = n1;
    maps[p][parts[p].cycle[3]] = n1 + 1;
  }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const BipartiteGraph& g = parts[p].graph;
    auto& map = maps[p];
    for (Vertex v = g.n1(); v < g.vertex_count(); ++v)
      if (map[v] < 0) map[v] = n1 + n2++;
  }

  std::array<Vertex, 4> hub{0, n1, 1, n1 + 1};
  auto on_cycle_edge = [&](Vertex a, Vertex b) {
    for (int i = 0; i < 4; ++i) {
      Vertex x = hub[i], y = hub[(i + 1) % 4];
      if ((a == x && b == y) || (a == y && b == x)) return true;
    }
    return false;
  };
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (const Edge& e : parts[p].graph.edges()) {
      Edge ne{maps[p][e.u], maps[p][e.v]};
      if (on_cycle_edge(ne.u, ne.v)) continue;
      edges.push_back(ne);
    }
  for (int idx : keep_edges) {
    Vertex a = hub[idx], b = hub[(idx + 1) % 4];
    edges.push_back(a < n1 ? Edge{a, b} : Edge{b, a});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return BipartiteGraph(n1, n2, std::move(edges));
}

BipartiteGraph random_graph_with_perfect_matching(int n, double density, std::mt19937& rng) {
  if (n < 1) throw InvalidArgument("random graph needs at least one vertex per class");
  std::vector<Vertex> partner(n);
  std::iota(partner.begin(), partner.end(), n);
  std::shuffle(partner.begin(), partner.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = n; v < 2 * n; ++v)
      if (v == partner[u] || coin(rng)) edges.push_back({u, v});
  return BipartiteGraph(n, n, std::move(edges));
}

BipartiteGraph random_matching_covered(int n, double density, std::mt19937& rng) {
  if (n < 1) throw InvalidArgument("random graph needs at least one vertex per class");
  // Hidden perfect matching u -> partner[u], plus a random cyclic order of the
  // matching edges joined head to tail: the M-direction then contains a
  // spanning cycle, is strongly connected, and every edge is admissible.
  std::vector<Vertex> partner(n);
  std::iota(partner.begin(), partner.end(), n);
  std::shuffle(partner.begin(), partner.end(), rng);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> edge(static_cast<std::size_t>(n) * n, 0);
  auto add = [&](Vertex u, Vertex v) { edge[static_cast<std::size_t>(u) * n + (v - n)] = 1; };
  for (Vertex u = 0; u < n; ++u) add(u, partner[u]);
  if (n > 1)
    for (int i = 0; i < n; ++i) add(order[i], partner[order[(i + 1) % n]]);
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = n; v < 2 * n; ++v)
      if (coin(rng) || edge[static_cast<std::size_t>(u) * n + (v - n)]) edges.push_back({u, v});
  return BipartiteGraph(n, n, std::move(edges));
}

}  // namespace bipmatch
