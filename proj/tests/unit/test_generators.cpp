#include <doctest.h>

#include <random>

#include "braces.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "isomorphism.hpp"
#include "matching.hpp"
#include "oracle.hpp"
#include "planarity.hpp"

using namespace bipmatch;

TEST_CASE("names") {
  CHECK(named_graph_from_string("heawood") == NamedGraphKind::Heawood);
  CHECK(named_graph_from_string("moebius") == NamedGraphKind::MoebiusLadder);
  CHECK_FALSE(named_graph_from_string("petersen"));
  CHECK(to_string(NamedGraphKind::Cube) == "cube");
}

TEST_CASE("K33") {
  auto k = generate(NamedGraphKind::K33);
  CHECK(k.vertex_count() == 6);
  CHECK(k.edge_count() == 9);
  CHECK(enumerate_perfect_matchings(k).size() == 6);
}

TEST_CASE("cube") {
  auto c = generate(NamedGraphKind::Cube);
  CHECK(c.vertex_count() == 8);
  CHECK(c.edge_count() == 12);
  // 000 - 001
  CHECK(c.has_edge(0, 4));
}

TEST_CASE("Heawood has girth 6") {
  auto h = generate(NamedGraphKind::Heawood);
  CHECK(h.vertex_count() == 14);
  CHECK(h.edge_count() == 21);
  for (Vertex x = 0; x < 14; ++x) CHECK(h.degree(x) == 3);
  CHECK(enumerate_cycles(h, 4, 4).empty());
  CHECK_FALSE(enumerate_cycles(h, 6, 6).empty());
}

TEST_CASE("Rotunda") {
  auto r = generate(NamedGraphKind::Rotunda);
  CHECK(r.vertex_count() == 16);
  CHECK(is_brace(r));
  CHECK_FALSE(is_planar(r));
  std::vector<SumPart> cubes(3, SumPart{generate(NamedGraphKind::Cube), kCubeSumCycle});
  CHECK(four_cycle_sum(cubes, {}) == r);
}

TEST_CASE("T10") {
  auto t = generate(NamedGraphKind::T10);
  CHECK(t.vertex_count() == 10);
  std::vector<SumPart> parts(3, SumPart{generate(NamedGraphKind::K33), kK33SumCycle});
  CHECK(four_cycle_sum(parts, {}) == t);
}

TEST_CASE("two cubes keeping the cycle") {
  std::vector<SumPart> cubes(2, SumPart{generate(NamedGraphKind::Cube), kCubeSumCycle});
  auto h12 = four_cycle_sum(cubes, {0, 1, 2, 3});
  CHECK(h12.vertex_count() == 12);
  CHECK(h12.edge_count() == 2 * 12 - 4);
}

TEST_CASE("four_cycle_sum errors") {
  SumPart cube{generate(NamedGraphKind::Cube), kCubeSumCycle};
  CHECK_THROWS_AS(four_cycle_sum({cube}, {}), InvalidArgument);
  SumPart bad{generate(NamedGraphKind::Cube), {0, 1, 4, 5}};
  CHECK_THROWS_AS(four_cycle_sum({cube, bad}, {}), InvalidArgument);
}

TEST_CASE("Moebius ladders") {
  CHECK(is_isomorphic(generate(NamedGraph{NamedGraphKind::MoebiusLadder, 1}), generate(NamedGraphKind::K33)));
  auto m2 = generate(NamedGraph{NamedGraphKind::MoebiusLadder, 2});
  CHECK(m2.vertex_count() == 10);
  CHECK(m2.edge_count() == 15);
  CHECK_THROWS_AS(generate(NamedGraph{NamedGraphKind::MoebiusLadder, 0}), InvalidArgument);
}

TEST_CASE("random generators are seeded and deliver what they promise") {
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    std::mt19937 a(seed), b(seed);
    auto g = random_matching_covered(8, 0.2, a);
    CHECK(g == random_matching_covered(8, 0.2, b));
    CHECK(is_matching_covered(g));
    std::mt19937 c(seed);
    CHECK(has_perfect_matching(random_graph_with_perfect_matching(7, 0.1, c)));
  }
  std::mt19937 rng(1);
  auto big = random_matching_covered(30, 0.05, rng);
  CHECK(big.vertex_count() == 60);
  CHECK(is_matching_covered(big));
}
