#include <doctest.h>

#include <random>

#include "braces.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "isomorphism.hpp"
#include "oracle.hpp"

using namespace bipmatch;

namespace {
std::vector<BipartiteGraph> graphs(const std::vector<Brace>& list) {
  std::vector<BipartiteGraph> out;
  for (const auto& b : list) out.push_back(b.graph);
  return out;
}
}  // namespace

TEST_CASE("braces by both definitions") {
  for (auto kind : {NamedGraphKind::C4, NamedGraphKind::K33, NamedGraphKind::Cube, NamedGraphKind::Heawood,
                    NamedGraphKind::Rotunda}) {
    CAPTURE(to_string(kind));
    CHECK(is_brace(generate(kind)));
    CHECK(is_brace_by_tight_cuts(generate(kind)));
  }
  CHECK_FALSE(is_brace(fixtures::p4()));
  CHECK_FALSE(is_brace(even_cycle(6)));
  CHECK_FALSE(is_brace_by_tight_cuts(even_cycle(6)));
  CHECK_FALSE(is_brace(BipartiteGraph(1, 1, {{0, 1}})));
}

TEST_CASE("C6 shore") {
  auto c6 = even_cycle(6);
  auto cut = find_nontrivial_tight_cut(c6);
  REQUIRE(cut);
  CHECK(cut->shore.size() == 3);
  CHECK(verify_tight_cut(c6, cut->shore));
  CHECK_FALSE(is_trivial_shore(c6, cut->shore));
  CHECK(check_tight_cut_bruteforce(c6, cut->shore));
  auto pair = tight_cut_contract(c6, cut->shore);
  CHECK(is_isomorphic(pair.first.graph, even_cycle(4)));
  CHECK(is_isomorphic(pair.second.graph, even_cycle(4)));
  CHECK(pair.first.origin[pair.first.contracted_vertex].contracted);
  CHECK(pair.first.origin[pair.first.contracted_vertex].originals.size() == 3);
}

TEST_CASE("tight cut verification") {
  auto k = generate(NamedGraphKind::K33);
  const Vertex single[] = {0};
  CHECK(verify_tight_cut(k, single));
  CHECK(is_trivial_shore(k, single));
  const Vertex side[] = {0, 1, 2};
  CHECK_FALSE(verify_tight_cut(k, side));
  CHECK_FALSE(check_tight_cut_bruteforce(k, {0, 1, 2}));
  CHECK_THROWS_AS(tight_cut_contract(k, single), InvalidArgument);
  CHECK_THROWS_AS(verify_tight_cut(fixtures::p4(), single), PreconditionError);
}

TEST_CASE("no cut in a brace") {
  CHECK_FALSE(find_nontrivial_tight_cut(generate(NamedGraphKind::Cube)));
  CHECK_FALSE(find_nontrivial_tight_cut(generate(NamedGraphKind::Heawood)));
}

TEST_CASE("two cubes glued on a kept cycle") {
  std::vector<SumPart> cubes(2, SumPart{generate(NamedGraphKind::Cube), kCubeSumCycle});
  auto h12 = four_cycle_sum(cubes, {0, 1, 2, 3});
  auto cut = find_nontrivial_tight_cut(h12);
  CHECK(cut.has_value() != is_brace(h12));
  if (cut) CHECK(check_tight_cut_bruteforce(h12, cut->shore));
}

TEST_CASE("decompositions") {
  auto cube = brace_decomposition(generate(NamedGraphKind::Cube));
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].graph == generate(NamedGraphKind::Cube));
  for (const auto& o : cube[0].origin) CHECK_FALSE(o.contracted);

  auto c6 = brace_decomposition(even_cycle(6));
  CHECK(same_multiset_up_to_isomorphism(graphs(c6), {even_cycle(4), even_cycle(4)}));
  auto c8 = brace_decomposition(even_cycle(8));
  CHECK(same_multiset_up_to_isomorphism(graphs(c8), {even_cycle(4), even_cycle(4), even_cycle(4)}));
  CHECK_THROWS_AS(brace_decomposition(fixtures::p4()), PreconditionError);
}

TEST_CASE("K2 is its own decomposition") {
  auto k2 = brace_decomposition(BipartiteGraph(1, 1, {{0, 1}}));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].graph.vertex_count() == 2);
}

TEST_CASE("random orders agree") {
  std::mt19937 gen(11);
  for (int i = 0; i < 10; ++i) {
    auto g = random_matching_covered(7, 0.1, gen);
    auto base = graphs(brace_decomposition(g));
    for (int order = 0; order < 20; ++order) {
      std::mt19937 rng(order);
      CHECK(same_multiset_up_to_isomorphism(base, graphs(brace_decomposition(g, &rng))));
    }
  }
}

TEST_CASE("brace vertex sets partition the graph") {
  auto c8 = even_cycle(8);
  auto list = brace_decomposition(c8);
  std::vector<int> seen(8, 0);
  for (const auto& b : list) {
    for (const auto& o : b.origin)
      if (!o.contracted) ++seen[o.originals.at(0)];
    CHECK(is_brace(b.graph));
  }
  for (int s : seen) CHECK(s == 1);
  CHECK(provenance_table(list[0]).find("C:{") != std::string::npos);
}
