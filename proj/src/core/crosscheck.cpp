#include "crosscheck.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "braces.hpp"
#include "errors.hpp"
#include "isomorphism.hpp"
#include "k33.hpp"
#include "matching.hpp"
#include "mdirection.hpp"
#include "mlp.hpp"
#include "oracle.hpp"

namespace bipmatch {
namespace {

struct Outcome {
  bool agree = true;
  std::string detail;
};

void run(std::vector<CheckResult>& out, const std::string& name, const std::function<Outcome()>& body) {
  CheckResult r{name, true, false, {}};
  try {
    Outcome o = body();
    r.agree = o.agree;
    r.detail = o.detail;
  } catch (const CapacityError& e) {
    r.skipped = true;
    r.detail = e.what();
  }
  out.push_back(std::move(r));
}

std::string verdicts(bool fast, bool brute) {
  std::ostringstream s;
  s << "polynomial=" << (fast ? "yes" : "no") << " oracle=" << (brute ? "yes" : "no");
  return s.str();
}

std::vector<BipartiteGraph> graphs_of(const std::vector<Brace>& braces) {
  std::vector<BipartiteGraph> out;
  for (const auto& b : braces) out.push_back(b.graph);
  return out;
}

}  // namespace

std::vector<CheckResult> crosscheck(const BipartiteGraph& g, const CrosscheckOptions& options) {
  std::vector<CheckResult> out;
  const SizeGuard guard;

  std::vector<Matching> pms;
  run(out, "perfect-matching", [&] {
    pms = enumerate_perfect_matchings(g, guard);
    const bool fast = has_perfect_matching(g);
    return Outcome{fast == !pms.empty(), verdicts(fast, !pms.empty())};
  });
  const bool has_pm = !pms.empty();

  for (int k : {1, 2})
    run(out, "extendible-k" + std::to_string(k), [&] {
      const bool fast = is_extendible(g, k);
      const bool slow = is_extendible_by_surplus(g, k);
      return Outcome{fast == slow, verdicts(fast, slow)};
    });

  if (!has_pm) return out;

  const bool covered = is_matching_covered(g);
  run(out, "matching-covered-vs-strong", [&] {
    for (const Matching& m : pms)
      if (is_strongly_connected(m_direction(g, m).digraph) != (covered && is_connected(g)))
        return Outcome{false, "disagreement for matching " + std::to_string(&m - pms.data())};
    return Outcome{true, std::to_string(pms.size()) + " matchings"};
  });

  if (covered) {
    run(out, "brace-vs-tight-cuts", [&] {
      if (g.vertex_count() < 4) return Outcome{true, "fewer than four vertices"};
      const bool a = is_brace(g);
      const bool b = is_brace_by_tight_cuts(g);
      return Outcome{a == b, verdicts(a, b)};
    });
    run(out, "tight-cut-definitional", [&] {
      auto cut = find_nontrivial_tight_cut(g);
      if (!cut) return Outcome{true, "no non-trivial tight cut"};
      return Outcome{check_tight_cut_bruteforce(g, cut->shore, guard), "shore of size " + std::to_string(cut->shore.size())};
    });
    run(out, "decomposition-order", [&] {
      const auto base = brace_decomposition(g);
      for (const auto& b : base)
        if (b.graph.vertex_count() >= 4 && !is_brace(b.graph)) return Outcome{false, "leaf is not a brace"};
      std::mt19937 rng(options.seed);
      for (int i = 0; i < options.decomposition_orders; ++i)
        if (!same_multiset_up_to_isomorphism(graphs_of(base), graphs_of(brace_decomposition(g, &rng))))
          return Outcome{false, "order " + std::to_string(i) + " differs"};
      return Outcome{true, std::to_string(base.size()) + " braces"};
    });
    run(out, "k33", [&] {
      if (g.vertex_count() > 14) throw CapacityError("k33 oracle limited to 14 vertices here");
      const bool fast = contains_k33(g);
      const bool slow = brute_contains_k33(g, guard);
      return Outcome{fast == slow, verdicts(fast, slow)};
    });
  }

  run(out, "mlp2", [&] {
    if (g.vertex_count() > options.max_mlp_vertices) throw CapacityError("2-MLP sweep limited by options");
    if (g.n1() < 2) return Outcome{true, "fewer than two vertices per class"};
    int instances = 0;
    for (Vertex a1 = 0; a1 < g.n1(); ++a1)
      for (Vertex a2 = a1 + 1; a2 < g.n1(); ++a2)
        for (Vertex b1 = g.n1(); b1 < g.vertex_count(); ++b1)
          for (Vertex b2 = g.n1(); b2 < g.vertex_count(); ++b2) {
            if (b1 == b2) continue;
            MlpProblem p{g, a1, a2, b1, b2};
            const bool fast = solve_2mlp(p);
            const bool slow = brute_2mlp_over(p, pms).linked;
            ++instances;
            if (fast != slow) {
              std::ostringstream s;
              s << "terminals a1=" << a1 << " a2=" << a2 << " b1=" << b1 << " b2=" << b2 << ": "
                << verdicts(fast, slow);
              return Outcome{false, s.str()};
            }
          }
    return Outcome{true, std::to_string(instances) + " instances"};
  });
  return out;
}

}  // namespace bipmatch
