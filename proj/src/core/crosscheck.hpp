#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace bipmatch {

struct CheckResult {
  std::string name;
  bool agree = true;
  bool skipped = false;
  std::string detail;
};

struct CrosscheckOptions {
  int decomposition_orders = 20;
  std::uint32_t seed = 1;
  int max_mlp_vertices = 12;  // all terminal quadruples up to this size
};

// Polynomial results against the oracle on one graph. Checks that do not
// apply (no perfect matching, too large for the oracle) are reported as
// skipped.
std::vector<CheckResult> crosscheck(const BipartiteGraph& graph, const CrosscheckOptions& options = {});

}  // namespace bipmatch
