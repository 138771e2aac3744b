#include "minv/graph_canon.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace minv {

int SimpleGraph::degree(int a) const { return std::popcount(adj[a]); }

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (int i = 0; i < v; ++i) twice += degree(i);
  return twice / 2;
}

namespace {

// One refinement sweep: recolor every vertex by (own color, sorted multiset of
// neighbor colors) and renumber the classes 0,1,... in sorted signature order.
// Repeats until the partition stabilizes.
std::vector<int> refine(const SimpleGraph& g, std::vector<int> color) {
  const int v = g.v;
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(v);
    for (int i = 0; i < v; ++i) {
      std::vector<int> nb;
      for (int j = 0; j < v; ++j)
        if (g.has_edge(i, j)) nb.push_back(color[j]);
      std::sort(nb.begin(), nb.end());
      sig[i] = {color[i], std::move(nb)};
    }
    std::vector<int> order(v);
    for (int i = 0; i < v; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> next(v);
    int cls = 0;
    for (int k = 0; k < v; ++k) {
      if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++cls;
      next[order[k]] = cls;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

std::uint64_t encode(const SimpleGraph& g, const std::vector<int>& position_of) {
  // position_of[original vertex] = canonical position.
  std::vector<int> vertex_at(g.v);
  for (int i = 0; i < g.v; ++i) vertex_at[position_of[i]] = i;
  std::uint64_t bits = 0;
  for (int i = 0; i < g.v; ++i)
    for (int j = i + 1; j < g.v; ++j)
      bits = (bits << 1) | (g.has_edge(vertex_at[i], vertex_at[j]) ? 1u : 0u);
  return bits;
}

void search(const SimpleGraph& g, const std::vector<int>& color, std::uint64_t& best) {
  const int v = g.v;
  // Find the first non-singleton color class.
  int cell_color = -1;
  std::vector<int> members;
  for (int c = 0; c < v && cell_color < 0; ++c) {
    members.clear();
    for (int i = 0; i < v; ++i)
      if (color[i] == c) members.push_back(i);
    if (members.size() > 1) cell_color = c;
  }
  if (cell_color < 0) {
    // Discrete: colors are a permutation.
    best = std::min(best, encode(g, color));
    return;
  }
  for (int pick : members) {
    std::vector<int> next = color;
    for (int i = 0; i < v; ++i) next[i] = 2 * next[i] + 1;
    next[pick] = 2 * cell_color;  // splits the cell, keeps relative order
    search(g, refine(g, std::move(next)), best);
  }
}

}  // namespace

std::uint64_t canonical_key(const SimpleGraph& g) {
  if (g.v > 10) throw std::domain_error("canonical_key supports at most 10 vertices");
  if (g.v == 0) return 0;
  std::vector<int> color(g.v, 0);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  search(g, refine(g, std::move(color)), best);
  return (std::uint64_t(g.v) << 45) | best;
}

}  // namespace minv
