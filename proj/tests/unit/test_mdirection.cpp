#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "isomorphism.hpp"
#include "matching.hpp"
#include "mdirection.hpp"

using namespace bipmatch;

TEST_CASE("C4 gives a 2-cycle for either matching") {
  auto c4 = generate(NamedGraphKind::C4);
  for (Matching m : {Matching{{{0, 2}, {1, 3}}}, Matching{{{0, 3}, {1, 2}}}}) {
    auto d = m_direction(c4, m).digraph;
    CHECK(d.node_count() == 2);
    CHECK(d.arc_count() == 2);
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(1, 0));
  }
}

TEST_CASE("K33 gives the complete digraph") {
  auto k = generate(NamedGraphKind::K33);
  auto d = m_direction(k, *perfect_matching(k)).digraph;
  CHECK(d.node_count() == 3);
  CHECK(d.arc_count() == 6);
}

TEST_CASE("P4 gives a single arc") {
  auto p = fixtures::p4();
  auto md = m_direction(p, *perfect_matching(p));
  CHECK(md.digraph.node_count() == 2);
  CHECK(md.digraph.arc_count() == 1);
  // edge 1-2 runs from the second matching edge's class-1 end to the first's class-2 end
  CHECK(md.digraph.has_arc(1, 0));
  CHECK(md.node_of[0] == 0);
  CHECK(md.node_of[2] == 0);
}

TEST_CASE("non-perfect matching rejected") {
  auto p = fixtures::p4();
  CHECK_THROWS(m_direction(p, Matching{{{0, 2}}}));
}

TEST_CASE("from_digraph") {
  auto [k2, m] = from_digraph(Digraph(1, {}));
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(m.size() == 1);
  auto [c6, m6] = from_digraph(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(is_isomorphic(c6, even_cycle(6)));
  CHECK(is_perfect(c6, m6));
}

TEST_CASE("round trip on random digraphs") {
  std::mt19937 rng(7);
  for (int seed = 0; seed < 50; ++seed) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<Arc> arcs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && rng() % 3 == 0) arcs.push_back({a, b});
    Digraph d(n, arcs);
    auto [g, m] = from_digraph(d);
    CHECK(m_direction(g, m).digraph == d);
  }
}

TEST_CASE("strong components") {
  CHECK(is_strongly_connected(Digraph(3, {{0, 1}, {1, 2}, {2, 0}})));
  Digraph single(2, {{0, 1}});
  CHECK_FALSE(is_strongly_connected(single));
  auto comps = strong_components(single);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0});
  CHECK(comps[1] == std::vector<int>{1});
  auto h = generate(NamedGraphKind::Heawood);
  CHECK(is_strongly_connected(m_direction(h, *perfect_matching(h)).digraph));
  const int removed[] = {0};
  auto rest = strong_components_without(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), removed);
  CHECK(rest.size() == 2);
}

TEST_CASE("reach_internally_conformal") {
  auto c4 = generate(NamedGraphKind::C4);
  Matching m{{{0, 3}, {1, 2}}};
  CHECK(reach_internally_conformal(c4, m, 0, 2));
  auto p = fixtures::p4();
  // u v w x with M = {uv, wx}: the interior v w is not matched along the path
  CHECK_FALSE(reach_internally_conformal(p, *perfect_matching(p), 0, 3));
  auto two = fixtures::two_c4();
  CHECK_FALSE(reach_internally_conformal(two, *perfect_matching(two), 0, 6));
  auto c8 = fixtures::c8();
  Matching mc8{{{fixtures::v(0), fixtures::v(7)}, {fixtures::v(2), fixtures::v(1)}, {fixtures::v(4), fixtures::v(3)},
                {fixtures::v(6), fixtures::v(5)}}};
  validate_matching(c8, mc8);
  CHECK(reach_internally_conformal(c8, mc8, fixtures::v(0), fixtures::v(3)));
  CHECK_THROWS_AS(reach_internally_conformal(c8, mc8, fixtures::v(1), fixtures::v(3)), InvalidArgument);
}
