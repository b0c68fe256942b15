#include "oracle.hpp"

#include <algorithm>

#include "errors.hpp"
#include "matching.hpp"

namespace bipmatch {
namespace {

std::vector<char> mask_of(int n, std::span<const Vertex> vertices) {
  std::vector<char> mask(n, 0);
  for (Vertex v : vertices) mask[v] = 1;
  return mask;
}

// Internally M-conformal paths from `from` to `to` that avoid `used`: the
// path alternates non-matching / matching edges and its interior is matched
// along the path. `visit` gets every such path and returns true to stop.
template <typename Visit>
bool conformal_paths(const BipartiteGraph& g, const std::vector<Vertex>& mate, std::vector<char>& used,
                     const std::vector<char>& forbidden, Vertex from, Vertex to, std::vector<Vertex>& path,
                     Visit&& visit) {
  const Vertex u = path.back();
  for (Vertex w : g.neighbours(u)) {
    if (w == to) {
      path.push_back(w);
      bool stop = visit(path);
      path.pop_back();
      if (stop) return true;
      continue;
    }
    if (used[w] || forbidden[w]) continue;
    const Vertex x = mate[w];
    if (x == u || used[x] || forbidden[x]) continue;
    used[w] = used[x] = 1;
    path.push_back(w);
    path.push_back(x);
    bool stop = conformal_paths(g, mate, used, forbidden, from, to, path, visit);
    path.pop_back();
    path.pop_back();
    used[w] = used[x] = 0;
    if (stop) return true;
  }
  return false;
}

void require_cycle(const BipartiteGraph& g, const std::vector<Vertex>& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 4 || len % 2) throw InvalidArgument("cycle must have even length >= 4");
  auto sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("cycle repeats a vertex");
  for (int i = 0; i < len; ++i) {
    if (!g.contains(cycle[i])) throw InvalidArgument("cycle vertex out of range");
    if (!g.has_edge(cycle[i], cycle[(i + 1) % len])) throw InvalidArgument("cycle edge missing");
  }
}

struct AlternatingPath {
  std::vector<Vertex> vertices;
  bool first_in_m = false;
  bool last_in_m = false;
};

// M-alternating paths from `from` to `to` whose other vertices avoid
// `blocked`; `visit` returns true to stop.
template <typename Visit>
bool alternating_paths(const BipartiteGraph& g, const std::vector<Vertex>& mate, std::vector<char>& blocked,
                       Vertex to, AlternatingPath& path, Visit&& visit) {
  const Vertex u = path.vertices.back();
  const bool fresh = path.vertices.size() == 1;
  for (Vertex w : g.neighbours(u)) {
    const bool in_m = mate[u] == w;
    if (!fresh && in_m == path.last_in_m) continue;
    if (w != to && blocked[w]) continue;
    const AlternatingPath saved = path;
    if (fresh) path.first_in_m = in_m;
    path.last_in_m = in_m;
    path.vertices.push_back(w);
    bool stop;
    if (w == to) {
      stop = visit(path);
    } else {
      blocked[w] = 1;
      stop = alternating_paths(g, mate, blocked, to, path, visit);
      blocked[w] = 0;
    }
    path = saved;
    if (stop) return true;
  }
  return false;
}

int type_of(const AlternatingPath& p) {
  if (p.first_in_m && p.last_in_m) return 2;
  if (!p.first_in_m && !p.last_in_m) return 1;
  return 3;
}

}  // namespace

void check_guard(const BipartiteGraph& graph, const SizeGuard& guard) {
  if (graph.vertex_count() > guard.max_vertices)
    throw CapacityError("oracle limited to " + std::to_string(guard.max_vertices) + " vertices");
}

std::vector<Matching> enumerate_perfect_matchings(const BipartiteGraph& g, const SizeGuard& guard) {
  check_guard(g, guard);
  std::vector<Matching> out;
  if (g.n1() != g.n2()) return out;
  std::vector<char> taken(g.vertex_count(), 0);
  std::vector<Edge> current;
  auto rec = [&](auto&& self, Vertex u) -> void {
    if (u == g.n1()) {
      if (static_cast<std::int64_t>(out.size()) >= guard.max_matchings)
        throw CapacityError("more than " + std::to_string(guard.max_matchings) + " perfect matchings");
      out.push_back(Matching{current});
      return;
    }
    for (Vertex w : g.neighbours(u)) {
      if (taken[w]) continue;
      taken[w] = 1;
      current.push_back({u, w});
      self(self, u + 1);
      current.pop_back();
      taken[w] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

BruteMlpResult brute_2mlp_over(const MlpProblem& p, const std::vector<Matching>& matchings, const Cover* cover) {
  validate_problem(p);
  const auto& g = p.graph;
  const int n = g.vertex_count();
  const std::vector<char> none(n, 0);
  std::vector<char> forbid1 = mask_of(n, std::vector<Vertex>{p.a2, p.b2});
  for (const Matching& m : matchings) {
    if (cover && !std::all_of(cover->begin(), cover->end(), [&](const Edge& e) { return m.contains(e); }))
      continue;
    const auto mate = mates(g, m);
    std::vector<char> used(n, 0);
    used[p.a1] = 1;
    std::vector<Vertex> path1{p.a1};
    BruteMlpResult result;
    conformal_paths(g, mate, used, forbid1, p.a1, p.b1, path1, [&](const std::vector<Vertex>& q1) {
      std::vector<char> used2(n, 0);
      for (Vertex v : q1) used2[v] = 1;
      used2[p.a2] = 1;
      std::vector<Vertex> path2{p.a2};
      return conformal_paths(g, mate, used2, none, p.a2, p.b2, path2, [&](const std::vector<Vertex>& q2) {
        result.linked = true;
        result.witness = MlpWitness{m, q1, q2};
        return true;
      });
    });
    if (result.linked) return result;
  }
  return {};
}

BruteMlpResult brute_2mlp(const MlpProblem& p, const Cover* cover, const SizeGuard& guard) {
  return brute_2mlp_over(p, enumerate_perfect_matchings(p.graph, guard), cover);
}

bool brute_reach_internally_conformal(const BipartiteGraph& g, const Matching& perfect, Vertex a, Vertex b,
                                      const SizeGuard& guard) {
  check_guard(g, guard);
  if (!g.contains(a) || !g.contains(b) || a == b) throw InvalidArgument("bad path endpoints");
  if (!is_perfect(g, perfect)) throw PreconditionError("matching is not perfect");
  const auto mate = mates(g, perfect);
  std::vector<char> on(g.vertex_count(), 0);
  std::vector<Vertex> path{a};
  on[a] = 1;
  // Every simple path; the interior test is applied as the path grows: an
  // interior vertex must sit next to its mate, and the mate must be interior
  // too. `last` is the index of the last interior vertex.
  auto interior_ok = [&](std::size_t i, std::size_t last) {
    const Vertex v = path[i];
    return (i >= 2 && path[i - 1] == mate[v]) || (i + 1 <= last && path[i + 1] == mate[v]);
  };
  auto rec = [&](auto&& self) -> bool {
    const Vertex u = path.back();
    for (Vertex w : g.neighbours(u)) {
      if (on[w]) continue;
      path.push_back(w);
      if (w == b) {
        bool ok = true;
        for (std::size_t i = 1; ok && i + 1 < path.size(); ++i) ok = interior_ok(i, path.size() - 2);
        if (ok) return true;
      } else if (path.size() < 3 || interior_ok(path.size() - 2, path.size() - 1)) {
        on[w] = 1;
        if (self(self)) return true;
        on[w] = 0;
      }
      path.pop_back();
    }
    return false;
  };
  return rec(rec);
}

std::optional<Cross> find_matching_cross(const BipartiteGraph& g, const std::vector<Vertex>& cycle, CrossKind kind,
                                         const SizeGuard& guard) {
  check_guard(g, guard);
  require_cycle(g, cycle);
  if (!is_conformal_set(g, cycle)) throw PreconditionError("cycle is not conformal");
  const int n = g.vertex_count();
  const int len = static_cast<int>(cycle.size());
  const auto on_cycle = mask_of(n, cycle);
  const auto matchings = enumerate_perfect_matchings(g, guard);

  for (const Matching& m : matchings) {
    const auto mate = mates(g, m);
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j)
        for (int k = j + 1; k < len; ++k)
          for (int l = k + 1; l < len; ++l) {
            const Vertex s1 = cycle[i], s2 = cycle[j], t1 = cycle[k], t2 = cycle[l];
            if (kind == CrossKind::Strong) {
              int first = 0;
              for (Vertex v : {s1, s2, t1, t2}) first += g.in_first_class(v);
              if (first != 2) continue;
            }
            std::optional<Cross> found;
            std::vector<char> blocked = on_cycle;
            AlternatingPath p1{{s1}};
            alternating_paths(g, mate, blocked, t1, p1, [&](const AlternatingPath& q1) {
              std::vector<char> blocked2 = blocked;
              for (Vertex v : q1.vertices) blocked2[v] = 1;
              AlternatingPath p2{{s2}};
              return alternating_paths(g, mate, blocked2, t2, p2, [&](const AlternatingPath& q2) {
                if (kind == CrossKind::Strong && type_of(q1) != type_of(q2)) return false;
                if (kind == CrossKind::Conformal) {
                  std::vector<Vertex> span = cycle;
                  span.insert(span.end(), q1.vertices.begin(), q1.vertices.end());
                  span.insert(span.end(), q2.vertices.begin(), q2.vertices.end());
                  std::sort(span.begin(), span.end());
                  span.erase(std::unique(span.begin(), span.end()), span.end());
                  if (!is_conformal_set(g, span)) return false;
                }
                found = Cross{m, q1.vertices, q2.vertices};
                return true;
              });
            });
            if (found) return found;
          }
  }
  return std::nullopt;
}

bool has_matching_cross(const BipartiteGraph& g, const std::vector<Vertex>& cycle, const SizeGuard& guard) {
  return find_matching_cross(g, cycle, CrossKind::Plain, guard).has_value();
}

bool has_strong_matching_cross(const BipartiteGraph& g, const std::vector<Vertex>& cycle, const SizeGuard& guard) {
  return find_matching_cross(g, cycle, CrossKind::Strong, guard).has_value();
}

bool has_conformal_cross(const BipartiteGraph& g, const std::vector<Vertex>& cycle, const SizeGuard& guard) {
  return find_matching_cross(g, cycle, CrossKind::Conformal, guard).has_value();
}

std::optional<K33Bisubdivision> find_conformal_k33_bisubdivision(const BipartiteGraph& g,
                                                                 const std::vector<Vertex>* required_cycle,
                                                                 const SizeGuard& guard) {
  check_guard(g, guard);
  if (required_cycle) require_cycle(g, *required_cycle);
  const int n = g.vertex_count();
  std::vector<Vertex> big1, big2;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) >= 3) (g.in_first_class(v) ? big1 : big2).push_back(v);

  std::vector<char> used(n, 0);
  K33Bisubdivision current;
  current.paths.resize(9);

  auto finish = [&]() {
    std::vector<Vertex> span;
    for (Vertex v = 0; v < n; ++v)
      if (used[v]) span.push_back(v);
    if (required_cycle) {
      std::vector<Edge> on;
      for (const auto& path : current.paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i) on.push_back(make_edge(g, path[i], path[i + 1]));
      std::sort(on.begin(), on.end());
      const auto& c = *required_cycle;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (!std::binary_search(on.begin(), on.end(), make_edge(g, c[i], c[(i + 1) % c.size()]))) return false;
    }
    return is_conformal_set(g, span);
  };

  // Routes path number p (x_{p/3} to y_{p%3}) through unused vertices.
  auto route = [&](auto&& self, int p) -> bool {
    if (p == 9) return finish();
    const Vertex from = current.xs[p / 3];
    const Vertex to = current.ys[p % 3];
    auto& path = current.paths[p];
    path.assign(1, from);
    auto walk = [&](auto&& walk_self) -> bool {
      const Vertex u = path.back();
      for (Vertex w : g.neighbours(u)) {
        if (w == to) {
          path.push_back(w);
          if (self(self, p + 1)) return true;
          path.pop_back();
          continue;
        }
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        if (walk_self(walk_self)) return true;
        path.pop_back();
        used[w] = 0;
      }
      return false;
    };
    return walk(walk);
  };

  auto triples = [](const std::vector<Vertex>& pool) {
    std::vector<std::array<Vertex, 3>> out;
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        for (std::size_t k = j + 1; k < pool.size(); ++k) out.push_back({pool[i], pool[j], pool[k]});
    return out;
  };
  for (const auto& xs : triples(big1))
    for (const auto& ys : triples(big2)) {
      current.xs = xs;
      current.ys = ys;
      for (Vertex v : xs) used[v] = 1;
      for (Vertex v : ys) used[v] = 1;
      const bool ok = route(route, 0);
      if (ok) return current;
      for (Vertex v : xs) used[v] = 0;
      for (Vertex v : ys) used[v] = 0;
    }
  return std::nullopt;
}

bool brute_contains_k33(const BipartiteGraph& g, const SizeGuard& guard) {
  check_guard(g, guard);
  if (!has_perfect_matching(g) || !is_matching_covered(g))
    throw PreconditionError("brute_contains_k33: graph is not matching covered");
  return find_conformal_k33_bisubdivision(g, nullptr, guard).has_value();
}

bool check_tight_cut_bruteforce(const BipartiteGraph& g, const std::vector<Vertex>& shore, const SizeGuard& guard) {
  for (Vertex v : shore)
    if (!g.contains(v)) throw InvalidArgument("unknown vertex in shore");
  const auto inside = mask_of(g.vertex_count(), shore);
  for (const Matching& m : enumerate_perfect_matchings(g, guard)) {
    int crossing = 0;
    for (const Edge& e : m.edges) crossing += inside[e.u] != inside[e.v];
    if (crossing != 1) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> enumerate_cycles(const BipartiteGraph& g, int min_length, int max_length,
                                                  const SizeGuard& guard) {
  check_guard(g, guard);
  std::vector<std::vector<Vertex>> out;
  const int n = g.vertex_count();
  std::vector<char> on(n, 0);
  std::vector<Vertex> path;
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on[s] = 1;
    auto rec = [&](auto&& self) -> void {
      const Vertex u = path.back();
      const int len = static_cast<int>(path.size());
      for (Vertex w : g.neighbours(u)) {
        if (w == s && len >= 3 && len >= min_length && path[1] < u) out.push_back(path);
        if (w <= s || on[w] || len >= max_length) continue;
        on[w] = 1;
        path.push_back(w);
        self(self);
        path.pop_back();
        on[w] = 0;
      }
    };
    rec(rec);
    on[s] = 0;
  }
  return out;
}

}  // namespace bipmatch
