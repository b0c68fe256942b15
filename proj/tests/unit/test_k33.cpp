#include <doctest.h>

#include <numeric>
#include <random>

#include "braces.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "k33.hpp"
#include "matching.hpp"
#include "oracle.hpp"

using namespace bipmatch;

TEST_CASE("Heawood recognition") {
  auto h = generate(NamedGraphKind::Heawood);
  CHECK(is_heawood(h));
  std::vector<Vertex> perm(14);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(2);
  std::shuffle(perm.begin(), perm.begin() + 7, rng);
  std::shuffle(perm.begin() + 7, perm.end(), rng);
  CHECK(is_heawood(relabel(h, perm)));
  CHECK_FALSE(is_heawood(generate(NamedGraphKind::Cube)));
}

TEST_CASE("splitting sets") {
  auto r = generate(NamedGraphKind::Rotunda);
  auto s = find_splitting_set(r);
  REQUIRE(s);
  CHECK(s->a1 == 0);
  CHECK(s->a2 == 1);
  CHECK(s->b1 == r.n1());
  CHECK(s->b2 == r.n1() + 1);
  REQUIRE(s->components.size() == 3);
  for (const auto& c : s->components) CHECK(c.size() == 4);
  for (const auto& summand : splitting_summands(r, *s)) CHECK(summand.vertex_count() == 8);

  CHECK_FALSE(find_splitting_set(generate(NamedGraphKind::K33)));
  CHECK_THROWS_AS(find_splitting_set(even_cycle(6)), PreconditionError);
}

TEST_CASE("T10 is not a brace") {
  // Deleting the glued cycle leaves tight cuts around each K3,3 remainder.
  auto t = generate(NamedGraphKind::T10);
  CHECK(is_matching_covered(t));
  CHECK_FALSE(is_brace(t));
  CHECK_THROWS_AS(find_splitting_set(t), PreconditionError);
  CHECK_THROWS_AS(brace_contains_k33(t), PreconditionError);
  CHECK(contains_k33(t) == brute_contains_k33(t));
}

TEST_CASE("recognizer fixtures") {
  CHECK(brace_contains_k33(generate(NamedGraphKind::K33)));
  CHECK_FALSE(brace_contains_k33(generate(NamedGraphKind::Heawood)));
  CHECK_FALSE(brace_contains_k33(generate(NamedGraphKind::Rotunda)));
  CHECK_FALSE(brace_contains_k33(generate(NamedGraphKind::Cube)));
  CHECK(brace_contains_k33(generate(NamedGraph{NamedGraphKind::MoebiusLadder, 2})));
  CHECK_THROWS_AS(brace_contains_k33(even_cycle(6)), PreconditionError);
}

TEST_CASE("contains_k33 on non-braces") {
  CHECK_FALSE(contains_k33(even_cycle(6)));
  CHECK_FALSE(contains_k33(generate(NamedGraphKind::Cube)));
  auto k = generate(NamedGraphKind::K33);
  for (const Edge& e : k.edges()) {
    auto sub = fixtures::subdivide_twice(k, e);
    CHECK_FALSE(is_brace(sub));
    CHECK(contains_k33(sub));
  }
  CHECK(contains_k33(fixtures::k33_every_edge_subdivided()));
  CHECK_THROWS_AS(contains_k33(fixtures::p4()), PreconditionError);
}

TEST_CASE("deterministic") {
  auto r = generate(NamedGraphKind::Rotunda);
  CHECK(find_splitting_set(r)->components == find_splitting_set(r)->components);
}
