#include "isomorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace bipmatch {
namespace {

// Stable colouring of the disjoint union of a and b, so colours are
// comparable across the two graphs. Vertex v of b is at a.vertex_count() + v.
std::vector<int> refine(const BipartiteGraph& a, const BipartiteGraph& b) {
  const int na = a.vertex_count();
  const int n = na + b.vertex_count();
  auto graph_of = [&](int x) -> const BipartiteGraph& { return x < na ? a : b; };
  auto local = [&](int x) { return x < na ? x : x - na; };
  auto global = [&](int x, Vertex v) { return x < na ? v : v + na; };

  std::vector<int> colour(n);
  {
    std::map<std::pair<int, int>, int> ids;
    for (int x = 0; x < n; ++x) {
      const auto& g = graph_of(x);
      auto key = std::make_pair(g.in_first_class(local(x)) ? 0 : 1, g.degree(local(x)));
      colour[x] = ids.emplace(key, static_cast<int>(ids.size())).first->second;
    }
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) {
      std::vector<int> key{colour[x]};
      for (Vertex w : graph_of(x).neighbours(local(x))) key.push_back(colour[global(x, w)]);
      std::sort(key.begin() + 1, key.end());
      next[x] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
    }
    colour.swap(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

class Matcher {
 public:
  Matcher(const BipartiteGraph& a, const BipartiteGraph& b) : a_(a), b_(b) {
    const int n = a.vertex_count();
    auto colour = refine(a, b);
    ca_.assign(colour.begin(), colour.begin() + n);
    cb_.assign(colour.begin() + n, colour.end());
    adj_b_.assign(n, std::vector<char>(n, 0));
    for (const Edge& e : b.edges()) adj_b_[e.u][e.v] = adj_b_[e.v][e.u] = 1;
    image_.assign(n, -1);
    used_.assign(n, 0);
    // BFS order inside each component, components by rarest colour first.
    std::vector<int> frequency(*std::max_element(colour.begin(), colour.end()) + 1, 0);
    for (int c : ca_) ++frequency[c];
    std::vector<Vertex> starts(n);
    for (int v = 0; v < n; ++v) starts[v] = v;
    std::stable_sort(starts.begin(), starts.end(),
                     [&](Vertex x, Vertex y) { return frequency[ca_[x]] < frequency[ca_[y]]; });
    std::vector<char> placed(n, 0);
    for (Vertex s : starts) {
      if (placed[s]) continue;
      std::deque<Vertex> queue{s};
      placed[s] = 1;
      while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        order_.push_back(v);
        for (Vertex w : a.neighbours(v))
          if (!placed[w]) {
            placed[w] = 1;
            queue.push_back(w);
          }
      }
    }
  }

  bool colours_compatible() const {
    auto x = ca_, y = cb_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  std::optional<std::vector<Vertex>> solve() {
    if (!colours_compatible()) return std::nullopt;
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool consistent(Vertex v, Vertex w) const {
    if (ca_[v] != cb_[w] || used_[w]) return false;
    int mapped_neighbours = 0;
    for (Vertex u : a_.neighbours(v)) {
      if (image_[u] < 0) continue;
      if (!adj_b_[w][image_[u]]) return false;
      ++mapped_neighbours;
    }
    // Same number of already-mapped neighbours on the b side.
    int count = 0;
    for (Vertex x : b_.neighbours(w))
      if (reverse_image(x)) ++count;
    return count == mapped_neighbours;
  }

  bool reverse_image(Vertex x) const { return used_[x] != 0; }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex v = order_[depth];
    // Candidates: neighbours of the image of a mapped neighbour when one
    // exists, otherwise every vertex.
    Vertex anchor = -1;
    for (Vertex u : a_.neighbours(v))
      if (image_[u] >= 0) {
        anchor = image_[u];
        break;
      }
    auto try_candidate = [&](Vertex w) {
      if (!consistent(v, w)) return false;
      image_[v] = w;
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      image_[v] = -1;
      used_[w] = 0;
      return false;
    };
    if (anchor >= 0) {
      for (Vertex w : b_.neighbours(anchor))
        if (try_candidate(w)) return true;
    } else {
      for (Vertex w = 0; w < b_.vertex_count(); ++w)
        if (try_candidate(w)) return true;
    }
    return false;
  }

  const BipartiteGraph& a_;
  const BipartiteGraph& b_;
  std::vector<int> ca_, cb_;
  std::vector<std::vector<char>> adj_b_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.n1() != b.n1() || a.n2() != b.n2() || a.edge_count() != b.edge_count()) return std::nullopt;
  return Matcher(a, b).solve();
}

bool is_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (find_isomorphism(a, b)) return true;
  return a.n1() == b.n2() && a.n2() == b.n1() && find_isomorphism(a, transpose(b)).has_value();
}

bool same_multiset_up_to_isomorphism(const std::vector<BipartiteGraph>& a,
                                     const std::vector<BipartiteGraph>& b) {
  if (a.size() != b.size()) return false;
  std::vector<char> taken(b.size(), 0);
  for (const auto& g : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!taken[j] && is_isomorphic(g, b[j])) {
        taken[j] = 1;
        found = true;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace bipmatch
