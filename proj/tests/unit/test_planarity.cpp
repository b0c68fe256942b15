#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "matching.hpp"
#include "planarity.hpp"

using namespace bipmatch;

TEST_CASE("cube has six square faces") {
  auto r = test_planarity(generate(NamedGraphKind::Cube));
  REQUIRE(r.planar);
  CHECK(r.faces.size() == 6);
  for (const auto& f : r.faces) CHECK(f.size() == 4);
}

TEST_CASE("non-planar fixtures") {
  CHECK_FALSE(is_planar(generate(NamedGraphKind::K33)));
  CHECK_FALSE(is_planar(generate(NamedGraphKind::Rotunda)));
  CHECK_FALSE(is_planar(generate(NamedGraphKind::Heawood)));
  CHECK(test_planarity(generate(NamedGraphKind::K33)).faces.empty());
}

TEST_CASE("faces of planar matching covered graphs are conformal") {
  for (int len : {4, 6, 8, 10}) {
    auto c = even_cycle(len);
    auto r = test_planarity(c);
    REQUIRE(r.planar);
    CHECK(r.faces.size() == 2);
    for (const auto& f : r.faces) CHECK(is_conformal_set(c, f));
  }
  auto cube = generate(NamedGraphKind::Cube);
  for (const auto& f : test_planarity(cube).faces) CHECK(is_conformal_set(cube, f));
}

TEST_CASE("bounds_face ignores rotation and direction") {
  std::vector<std::vector<Vertex>> faces{{0, 4, 1, 5}};
  CHECK(bounds_face(faces, {1, 5, 0, 4}));
  CHECK(bounds_face(faces, {5, 1, 4, 0}));
  CHECK_FALSE(bounds_face(faces, {0, 4, 5, 1}));
  CHECK_FALSE(bounds_face(faces, {0, 4, 1}));
}

TEST_CASE("disconnected and tiny graphs") {
  CHECK(is_planar(fixtures::two_c4()));
  CHECK(is_planar(BipartiteGraph(0, 0, {})));
  CHECK(is_planar(BipartiteGraph(1, 1, {{0, 1}})));
}
