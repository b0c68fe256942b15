#include <doctest.h>

#include "errors.hpp"
#include "fixtures.hpp"
#include "graph.hpp"

using namespace bipmatch;

TEST_CASE("construction validates edges") {
  CHECK_THROWS_AS(BipartiteGraph(2, 2, {{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(BipartiteGraph(2, 2, {{0, 2}, {0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(BipartiteGraph(2, 2, {{0, 4}}), InvalidArgument);
  CHECK_THROWS_AS(BipartiteGraph(-1, 2, {}), InvalidArgument);
  BipartiteGraph g(2, 2, {{1, 3}, {0, 2}});
  CHECK(g.edges().front() == Edge{0, 2});
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.edge_index(1, 3) == 1);
  CHECK(g.edge_index(0, 3) == -1);
}

TEST_CASE("complete bipartite and cycles") {
  auto k = complete_bipartite(2, 2);
  CHECK(k.vertex_count() == 4);
  CHECK(k.edge_count() == 4);
  auto c = fixtures::c8();
  CHECK(c.edge_count() == 8);
  for (int i = 0; i < 8; ++i) CHECK(c.has_edge(fixtures::v(i), fixtures::v((i + 1) % 8)));
  CHECK(fixtures::v(0) == 0);
  CHECK(fixtures::v(1) == 4);
  auto p = fixtures::p4();
  CHECK(p.edge_count() == 3);
}

TEST_CASE("matching validation") {
  auto c = even_cycle(4);
  Matching ok{{{1, 3}, {0, 2}}};
  validate_matching(c, ok);
  CHECK(ok.edges.front() == Edge{0, 2});
  CHECK(is_perfect(c, ok));
  Matching shared{{{0, 2}, {0, 3}}};
  CHECK_THROWS_AS(validate_matching(c, shared), InvalidArgument);
  Matching missing{{{0, 9}}};
  CHECK_THROWS_AS(validate_matching(c, missing), InvalidArgument);
  auto mate = mates(c, ok);
  CHECK(mate[0] == 2);
  CHECK(matching_from_mates(c, mate) == ok);
}

TEST_CASE("subgraphs keep class order") {
  auto c = fixtures::c8();
  const Vertex drop[] = {fixtures::v(0), fixtures::v(1)};
  auto sub = remove_vertices(c, drop);
  CHECK(sub.graph.n1() == 3);
  CHECK(sub.graph.n2() == 3);
  CHECK(sub.graph.edge_count() == 5);
  CHECK(sub.to_new[fixtures::v(0)] == -1);
  for (Vertex w = 0; w < sub.graph.vertex_count(); ++w) CHECK(sub.to_new[sub.to_old[w]] == w);
  CHECK(is_connected(sub.graph));
}

TEST_CASE("components") {
  auto g = fixtures::two_c4();
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<Vertex>{0, 1, 4, 5});
  CHECK_FALSE(is_connected(g));
}

TEST_CASE("transpose and relabel") {
  auto p = fixtures::p4();
  auto t = transpose(p);
  CHECK(t.edge_count() == 3);
  CHECK(transpose(t) == p);
  std::vector<Vertex> perm{1, 0, 3, 2};
  auto r = relabel(p, perm);
  CHECK(r.edge_count() == 3);
  std::vector<Vertex> bad{2, 0, 1, 3};
  CHECK_THROWS_AS(relabel(p, bad), InvalidArgument);
}
