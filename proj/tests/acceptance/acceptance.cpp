// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "braces.hpp"
#include "corpus.hpp"
#include "generators.hpp"
#include "isomorphism.hpp"
#include "k33.hpp"
#include "matching.hpp"
#include "mdirection.hpp"
#include "mlp.hpp"
#include "oracle.hpp"
#include "planarity.hpp"

using namespace bipmatch;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Report {
  bool ok = true;
  std::vector<std::string> notes;

  void note(const std::string& s) { notes.push_back(s); }
  // Records a failure with at most a few examples.
  void fail(const std::string& s) {
    if (ok || notes.size() < 12) notes.push_back("violation: " + s);
    ok = false;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Report&)>& body) {
  Report r;
  const auto t = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1fs", seconds_since(t));
  std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << buf << "]\n";
  for (const auto& n : r.notes) std::cout << "    " << n << '\n';
  std::cout.flush();
  if (!r.ok) ++failures;
}

std::string describe(const BipartiteGraph& g) {
  std::ostringstream s;
  s << "n1=" << g.n1() << " edges";
  for (const Edge& e : g.edges()) s << ' ' << e.u << '-' << e.v;
  return s.str();
}

std::string quad(Vertex a1, Vertex a2, Vertex b1, Vertex b2) {
  std::ostringstream s;
  s << "a1=" << a1 << " a2=" << a2 << " b1=" << b1 << " b2=" << b2;
  return s.str();
}

// Corpus graphs on <= 10 vertices, shared by several criteria.
const std::vector<BipartiteGraph>& small_corpus() {
  static const std::vector<BipartiteGraph> corpus = exhaustive_corpus(5);
  return corpus;
}

std::vector<BipartiteGraph> graphs_of(const std::vector<Brace>& braces) {
  std::vector<BipartiteGraph> out;
  for (const auto& b : braces) out.push_back(b.graph);
  return out;
}

// Braces on at most 14 vertices: every brace of the exhaustive corpus, the
// named ones, and braces among seeded random graphs on 12 and 14 vertices.
std::vector<BipartiteGraph> brace_corpus() {
  std::vector<BipartiteGraph> out;
  for (const auto& g : small_corpus())
    if (g.vertex_count() >= 4 && is_brace(g)) out.push_back(g);
  for (auto kind : {NamedGraphKind::Cube, NamedGraphKind::Heawood})
    out.push_back(generate(kind));
  for (int k : {2, 3}) out.push_back(generate(NamedGraph{NamedGraphKind::MoebiusLadder, k}));
  std::vector<BipartiteGraph> extra;
  for (int n : {6, 7})
    for (double d : {0.15, 0.3, 0.45}) {
      for (const auto& g : random_corpus(60, n, n, d, 1000 * n + static_cast<int>(d * 100)))
        if (is_brace(g)) extra.push_back(g);
    }
  for (const auto& g : extra) {
    bool seen = false;
    for (const auto& h : out)
      if (h.vertex_count() == g.vertex_count() && h.edge_count() == g.edge_count() && is_isomorphic(g, h)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(g);
  }
  return out;
}

// A 4-cycle (c0, c1, c2, c3) with c0, c2 in class 1, for gluing.
std::array<Vertex, 4> some_four_cycle(const BipartiteGraph& g) {
  for (const auto& c : enumerate_cycles(g, 4, 4)) {
    if (g.in_first_class(c[0])) return {c[0], c[1], c[2], c[3]};
    return {c[1], c[2], c[3], c[0]};
  }
  return {-1, -1, -1, -1};
}

void mlp_oracle_equivalence(Report& r) {
  const auto start = Clock::now();
  long instances = 0, linked = 0, graphs = 0;
  for (const auto& g : small_corpus()) {
    if (g.n1() < 2) continue;
    ++graphs;
    const auto pms = enumerate_perfect_matchings(g);
    for (Vertex a1 = 0; a1 < g.n1(); ++a1)
      for (Vertex a2 = 0; a2 < g.n1(); ++a2)
        for (Vertex b1 = g.n1(); b1 < g.vertex_count(); ++b1)
          for (Vertex b2 = g.n1(); b2 < g.vertex_count(); ++b2) {
            if (a1 == a2 || b1 == b2) continue;
            MlpProblem p{g, a1, a2, b1, b2};
            const bool fast = solve_2mlp(p);
            const bool slow = brute_2mlp_over(p, pms).linked;
            ++instances;
            linked += slow;
            if (fast != slow) r.fail(describe(g) + " " + quad(a1, a2, b1, b2));
          }
  }
  r.note("exhaustive: " + std::to_string(graphs) + " graphs, " + std::to_string(instances) + " quadruples, " +
         std::to_string(linked) + " linked");

  long random_instances = 0, random_linked = 0;
  std::mt19937 pick(2024);
  const double densities[] = {0.15, 0.3};
  for (int part = 0; part < 2; ++part)
    for (const auto& g : random_corpus(250, 6, 8, densities[part], 500 + part)) {
      const auto pms = enumerate_perfect_matchings(g);
      std::uniform_int_distribution<Vertex> A(0, g.n1() - 1), B(g.n1(), g.vertex_count() - 1);
      for (int q = 0; q < 10; ++q) {
        Vertex a1 = A(pick), a2 = A(pick), b1 = B(pick), b2 = B(pick);
        while (a2 == a1) a2 = A(pick);
        while (b2 == b1) b2 = B(pick);
        MlpProblem p{g, a1, a2, b1, b2};
        const bool fast = solve_2mlp(p);
        const bool slow = brute_2mlp_over(p, pms).linked;
        ++random_instances;
        random_linked += slow;
        if (fast != slow) r.fail(describe(g) + " " + quad(a1, a2, b1, b2));
      }
    }
  r.note("random: 500 matching covered graphs on 12-16 vertices, " + std::to_string(random_instances) +
         " quadruples, " + std::to_string(random_linked) + " linked");
  const double t = seconds_since(start);
  r.note("total " + std::to_string(static_cast<int>(t)) + "s (limit 900s)");
  r.expect(t <= 900, "runtime above 15 minutes");
}

void recognizer_fixtures(Report& r) {
  r.expect(!brace_contains_k33(generate(NamedGraphKind::Cube)), "Cube");
  r.expect(!brace_contains_k33(generate(NamedGraphKind::Heawood)), "Heawood");
  r.expect(!brace_contains_k33(generate(NamedGraphKind::Rotunda)), "Rotunda");
  r.expect(brace_contains_k33(generate(NamedGraphKind::K33)), "K33");

  auto k = generate(NamedGraphKind::K33);
  for (const Edge& e : k.edges()) {
    // u - q - p - w: class 1 gains p = 3, class 2 shifts by one and gains q = 7
    std::vector<Edge> edges;
    for (const Edge& f : k.edges())
      if (!(f == e)) edges.push_back({f.u, f.v + 1});
    edges.push_back({e.u, 7});
    edges.push_back({3, 7});
    edges.push_back({3, e.v + 1});
    BipartiteGraph sub(4, 4, edges);
    r.expect(contains_k33(sub), "K33 with edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                    " subdivided twice");
  }

  // Trisums of planar braces, every choice of kept cycle edges that leaves a brace.
  std::vector<SumPart> pool;
  pool.push_back({generate(NamedGraphKind::Cube), kCubeSumCycle});
  for (const auto& g : small_corpus())
    if (g.vertex_count() == 10 && is_brace(g) && is_planar(g) && pool.size() < 3)
      pool.push_back({g, some_four_cycle(g)});
  int trisums = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j)
      for (std::size_t l = j; l < pool.size(); ++l)
        for (int mask = 0; mask < 16; ++mask) {
          std::vector<int> keep;
          for (int b = 0; b < 4; ++b)
            if (mask >> b & 1) keep.push_back(b);
          auto t = four_cycle_sum({pool[i], pool[j], pool[l]}, keep);
          if (!is_brace(t)) continue;
          ++trisums;
          r.expect(!brace_contains_k33(t), "planar trisum " + describe(t));
        }
  r.note(std::to_string(trisums) + " trisum fixtures from " + std::to_string(pool.size()) + " planar braces");
  r.expect(trisums >= 10, "too few trisum fixtures");

  int checked = 0, with_k33 = 0;
  for (const auto& b : brace_corpus()) {
    const bool fast = brace_contains_k33(b);
    const bool slow = brute_contains_k33(b);
    ++checked;
    with_k33 += slow;
    if (fast != slow) r.fail("oracle disagreement on " + describe(b));
  }
  r.note(std::to_string(checked) + " braces on <= 14 vertices against the oracle, " + std::to_string(with_k33) +
         " contain K3,3");
}

void heawood_suite(Report& r) {
  auto h = generate(NamedGraphKind::Heawood);
  r.expect(h.vertex_count() == 14, "vertex count");
  for (Vertex v = 0; v < h.vertex_count(); ++v) r.expect(h.degree(v) == 3, "degree of " + std::to_string(v));
  r.expect(enumerate_cycles(h, 4, 4).empty(), "has a 4-cycle");
  r.expect(!is_planar(h), "planar");
  r.expect(is_brace(h), "not a brace");
  for (int len : {6, 10, 14}) {
    int conformal = 0, crossed = 0;
    for (const auto& c : enumerate_cycles(h, len, len)) {
      if (!is_conformal_set(h, c)) continue;
      ++conformal;
      if (has_conformal_cross(h, c))
        ++crossed;
      else
        r.fail("no conformal cross over a " + std::to_string(len) + "-cycle");
    }
    r.note("length " + std::to_string(len) + ": " + std::to_string(crossed) + "/" + std::to_string(conformal) +
           " conformal cycles have a conformal cross");
    r.expect(conformal > 0, "no conformal cycle of length " + std::to_string(len));
  }
}

void planar_crosses(Report& r) {
  std::vector<std::pair<std::string, BipartiteGraph>> fixtures{{"cube", generate(NamedGraphKind::Cube)}};
  std::vector<SumPart> cubes(2, SumPart{generate(NamedGraphKind::Cube), kCubeSumCycle});
  auto h12 = four_cycle_sum(cubes, {0, 1, 2, 3});
  if (is_brace(h12) && is_planar(h12)) fixtures.push_back({"two cubes glued on a face", h12});
  for (const auto& g : small_corpus()) {
    if (fixtures.size() >= 3) break;
    if (g.vertex_count() == 10 && is_brace(g) && is_planar(g)) fixtures.push_back({"10-vertex planar brace", g});
  }
  r.expect(fixtures.size() == 3, "could not assemble three planar braces");
  for (const auto& [name, g] : fixtures) {
    auto faces = test_planarity(g).faces;
    for (const auto& f : faces) r.expect(is_conformal_set(g, f), name + ": facial cycle not conformal");
    int conformal = 0, facial = 0;
    for (const auto& c : enumerate_cycles(g, 4, g.vertex_count())) {
      if (!is_conformal_set(g, c)) continue;
      ++conformal;
      const bool face = bounds_face(faces, c);
      facial += face;
      if (has_strong_matching_cross(g, c) == face)
        r.fail(name + ": strong cross " + (face ? "over a face" : "missing over a non-facial cycle"));
    }
    r.note(name + " (" + std::to_string(g.vertex_count()) + " vertices): " + std::to_string(conformal) +
           " conformal cycles, " + std::to_string(facial) + " facial");
  }
}

void brace_uniqueness(Report& r) {
  int graphs = 0;
  auto check = [&](const BipartiteGraph& g) {
    if (!is_matching_covered(g)) return;
    ++graphs;
    auto base = graphs_of(brace_decomposition(g));
    for (std::uint32_t order = 0; order < 20; ++order) {
      std::mt19937 rng(order);
      if (!same_multiset_up_to_isomorphism(base, graphs_of(brace_decomposition(g, &rng)))) {
        r.fail("order " + std::to_string(order) + " differs on " + describe(g));
        return;
      }
    }
  };
  for (const auto& g : small_corpus()) check(g);
  for (const auto& g : random_corpus(100, 6, 10, 0.1, 77)) check(g);
  for (auto kind : {NamedGraphKind::Rotunda, NamedGraphKind::T10}) check(generate(kind));
  r.note(std::to_string(graphs) + " matching covered graphs, 20 random orders each");
  const BipartiteGraph c4 = even_cycle(4);
  r.expect(same_multiset_up_to_isomorphism(graphs_of(brace_decomposition(even_cycle(6))), {c4, c4}),
           "C6 is not two C4");
  r.expect(same_multiset_up_to_isomorphism(graphs_of(brace_decomposition(even_cycle(8))), {c4, c4, c4}),
           "C8 is not three C4");
}

// Non-trivial tight cut by definition: some odd shore X with 3 <= |X| <=
// |V| - 3 met exactly once by every perfect matching.
bool has_definitional_tight_cut(const BipartiteGraph& g, const std::vector<Matching>& pms) {
  const int n = g.vertex_count();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (mask & 1) continue;  // X and its complement give the same cut
    const int size = __builtin_popcount(mask);
    if (size % 2 == 0 || size < 3 || size > n - 3) continue;
    bool tight = true;
    for (const Matching& m : pms) {
      int crossing = 0;
      for (const Edge& e : m.edges) crossing += ((mask >> e.u) & 1) != ((mask >> e.v) & 1);
      if (crossing != 1) {
        tight = false;
        break;
      }
    }
    if (tight) return true;
  }
  return false;
}

void extendibility(Report& r) {
  int graphs = 0, braces = 0;
  for (const auto& g : small_corpus()) {
    ++graphs;
    for (int k : {1, 2})
      if (is_extendible(g, k) != is_extendible_by_surplus(g, k))
        r.fail("k=" + std::to_string(k) + " on " + describe(g));
    const bool brace = is_brace(g);
    braces += brace;
    bool by_cuts = false;
    if (g.vertex_count() >= 4 && is_matching_covered(g))
      by_cuts = !has_definitional_tight_cut(g, enumerate_perfect_matchings(g));
    if (brace != by_cuts) r.fail("brace test vs tight cuts on " + describe(g));
    if (brace != is_brace_by_tight_cuts(g)) r.fail("brace test vs tight-cut finder on " + describe(g));
  }
  r.note(std::to_string(graphs) + " graphs with a perfect matching, " + std::to_string(braces) + " braces");
}

void cross_bisubdivision(Report& r) {
  int braces = 0, cycles = 0, crosses = 0;
  for (const auto& b : brace_corpus()) {
    ++braces;
    const bool k33 = brute_contains_k33(b);
    for (const auto& c : enumerate_cycles(b, 4, 4)) {
      ++cycles;
      const bool cross = has_conformal_cross(b, c);
      const bool sub = find_conformal_k33_bisubdivision(b, &c).has_value();
      crosses += cross;
      if (cross != sub) r.fail("cross=" + std::to_string(cross) + " bisubdivision=" + std::to_string(sub) + " on " +
                               describe(b));
      if (k33 && !sub) r.fail("4-cycle outside every K3,3 bisubdivision on " + describe(b));
    }
  }
  r.note(std::to_string(braces) + " braces, " + std::to_string(cycles) + " 4-cycles, " + std::to_string(crosses) +
         " with a conformal cross");
}

void m_direction_bridge(Report& r) {
  std::mt19937 rng(31);
  for (int seed = 0; seed < 200; ++seed) {
    std::mt19937 local(seed);
    const int n = 1 + static_cast<int>(local() % 12);
    std::bernoulli_distribution arc(0.25);
    std::vector<Arc> arcs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && arc(local)) arcs.push_back({a, b});
    Digraph d(n, arcs);
    auto [g, m] = from_digraph(d);
    if (!(m_direction(g, m).digraph == d)) r.fail("digraph round trip, seed " + std::to_string(seed));

    auto h = random_graph_with_perfect_matching(2 + static_cast<int>(local() % 8), 0.3, local);
    auto pm = *perfect_matching(h, &local);
    auto back = from_digraph(m_direction(h, pm).digraph);
    if (!is_isomorphic(back.first, h)) r.fail("graph round trip, seed " + std::to_string(seed));
  }
  r.note("200 seeds, both directions");

  long pairs = 0, queries = 0;
  for (const auto& g : small_corpus()) {
    const bool covered = is_matching_covered(g);
    for (const Matching& m : enumerate_perfect_matchings(g)) {
      ++pairs;
      if (is_strongly_connected(m_direction(g, m).digraph) != covered)
        r.fail("matching covered vs strongly connected on " + describe(g));
      for (Vertex a = 0; a < g.n1(); ++a)
        for (Vertex b = g.n1(); b < g.vertex_count(); ++b) {
          ++queries;
          if (reach_internally_conformal(g, m, a, b) != brute_reach_internally_conformal(g, m, a, b))
            r.fail("reach on " + describe(g) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    }
  }
  r.note(std::to_string(pairs) + " (graph, perfect matching) pairs, " + std::to_string(queries) + " reach queries");
}

void performance(Report& r) {
  double worst = 0;
  int instances = 0;
  for (double density : {0.06, 0.1, 0.2})
    for (std::uint32_t seed = 1; seed <= 4; ++seed) {
      std::mt19937 rng(seed);
      auto g = random_matching_covered(30, density, rng);
      std::uniform_int_distribution<Vertex> A(0, 29), B(30, 59);
      Vertex a1 = A(rng), a2 = A(rng), b1 = B(rng), b2 = B(rng);
      while (a2 == a1) a2 = A(rng);
      while (b2 == b1) b2 = B(rng);
      const auto t = Clock::now();
      std::vector<CoverTrace> trace;
      const bool yes = solve_2mlp({g, a1, a2, b1, b2}, &trace);
      const double s = seconds_since(t);
      worst = std::max(worst, s);
      ++instances;
      char buf[160];
      std::snprintf(buf, sizeof buf, "density %.2f seed %u: %d edges, %s after %zu covers, %.3fs", density, seed,
                    g.edge_count(), yes ? "yes" : "no", trace.size(), s);
      r.note(buf);
      r.expect(s <= 60, "instance above 60 seconds");
    }
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst %.3fs over %d instances", worst, instances);
  r.note(buf);
}

}  // namespace

int main() {
  std::cout << "acceptance run\n";
  criterion(1, "2-MLP solver equals exhaustive search", mlp_oracle_equivalence);
  criterion(2, "K3,3 recognizer fixtures and oracle agreement", recognizer_fixtures);
  criterion(3, "Heawood graph and its conformal crosses", heawood_suite);
  criterion(4, "strong crosses in planar braces exactly over non-facial cycles", planar_crosses);
  criterion(5, "brace decomposition independent of cut order", brace_uniqueness);
  criterion(6, "extendibility conditions and brace characterisation agree", extendibility);
  criterion(7, "conformal crosses over 4-cycles match K3,3 bisubdivisions", cross_bisubdivision);
  criterion(8, "M-direction round trips, strong connectivity, reachability", m_direction_bridge);
  criterion(9, "2-MLP on 60-vertex graphs within 60 seconds", performance);
  std::cout << (failures ? "FAILED: " + std::to_string(failures) + " criteria" : std::string("all criteria passed"))
            << '\n';
  return failures;
}
