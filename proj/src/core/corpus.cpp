#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "errors.hpp"
#include "generators.hpp"
#include "matching.hpp"

namespace bipmatch {
namespace {

using Rows = std::vector<unsigned>;

unsigned permute_bits(unsigned row, const std::vector<int>& perm) {
  unsigned out = 0;
  for (std::size_t c = 0; c < perm.size(); ++c)
    if (row >> c & 1u) out |= 1u << perm[c];
  return out;
}

bool is_canonical(const Rows& rows, const std::vector<std::vector<int>>& perms) {
  Rows image(rows.size());
  for (const auto& perm : perms) {
    for (std::size_t i = 0; i < rows.size(); ++i) image[i] = permute_bits(rows[i], perm);
    std::sort(image.begin(), image.end());
    if (image < rows) return false;
  }
  return true;
}

BipartiteGraph from_rows(const Rows& rows) {
  const int p = static_cast<int>(rows.size());
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int c = 0; c < p; ++c)
      if (rows[i] >> c & 1u) edges.push_back({i, p + c});
  return BipartiteGraph(p, p, std::move(edges));
}

}  // namespace

std::vector<BipartiteGraph> exhaustive_corpus(int max_per_class) {
  if (max_per_class > 5) throw CapacityError("exhaustive corpus limited to 5 vertices per class");
  std::vector<BipartiteGraph> out;
  for (int p = 1; p <= max_per_class; ++p) {
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    const unsigned top = (1u << p) - 1;
    Rows rows(p, 1);
    // Non-decreasing row sequences over [1, top]; empty rows would isolate a
    // vertex, which cannot be connected anyway.
    while (true) {
      if (is_canonical(rows, perms)) {
        BipartiteGraph g = from_rows(rows);
        if (is_connected(g) && has_perfect_matching(g)) out.push_back(std::move(g));
      }
      int i = p - 1;
      while (i >= 0 && rows[i] == top) --i;
      if (i < 0) break;
      ++rows[i];
      for (int j = i + 1; j < p; ++j) rows[j] = rows[i];
    }
  }
  return out;
}

std::vector<BipartiteGraph> random_corpus(int count, int min_per_class, int max_per_class, double density,
                                          std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> size(min_per_class, max_per_class);
  std::vector<BipartiteGraph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_matching_covered(size(rng), density, rng));
  return out;
}

}  // namespace bipmatch
