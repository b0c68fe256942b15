#include <doctest.h>

#include "crosscheck.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace bipmatch;

namespace {
void all_agree(const BipartiteGraph& g, const CrosscheckOptions& o = {}) {
  for (const auto& r : crosscheck(g, o)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.agree);
  }
}
}  // namespace

TEST_CASE("fixtures agree") {
  all_agree(generate(NamedGraphKind::C4));
  all_agree(generate(NamedGraphKind::K33));
  all_agree(generate(NamedGraphKind::Cube));
  all_agree(even_cycle(8));
  all_agree(fixtures::p4());
  all_agree(fixtures::two_c4());
}

TEST_CASE("large inputs are skipped, not failed") {
  CrosscheckOptions o;
  o.max_mlp_vertices = 6;
  o.decomposition_orders = 2;
  auto results = crosscheck(generate(NamedGraphKind::Rotunda), o);
  bool skipped = false;
  for (const auto& r : results) {
    CHECK(r.agree);
    if (r.name == "mlp2") skipped = r.skipped;
  }
  CHECK(skipped);
}

TEST_CASE("graphs without a perfect matching stop early") {
  auto r = crosscheck(BipartiteGraph(1, 2, {{0, 1}, {0, 2}}));
  CHECK(r.size() == 3);
}
