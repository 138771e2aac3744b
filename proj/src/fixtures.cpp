#include "minv/fixtures.hpp"

#include <algorithm>
#include <unordered_set>

#include "minv/graphs.hpp"

namespace minv {

std::vector<SimpleGraph> connected_simple_graphs(int v) {
  if (v <= 0) return {};
  std::vector<SimpleGraph> current;
  current.push_back(SimpleGraph(1));
  for (int size = 2; size <= v; ++size) {
    // Every connected graph has a vertex (a spanning-tree leaf) whose removal
    // stays connected, so augmenting connected graphs with a new vertex and a
    // nonempty neighborhood reaches every class.
    std::vector<SimpleGraph> next;
    std::unordered_set<std::uint64_t> seen;
    for (const SimpleGraph& g : current) {
      for (std::uint32_t nb = 1; nb < (1u << (size - 1)); ++nb) {
        SimpleGraph h(size);
        for (int i = 0; i < g.v; ++i) h.adj[i] = g.adj[i];
        for (int i = 0; i < size - 1; ++i)
          if (has_bit(nb, i)) h.add_edge(i, size - 1);
        if (seen.insert(canonical_key(h)).second) next.push_back(std::move(h));
      }
    }
    current = std::move(next);
  }
  return current;
}

std::vector<SimpleGraph> connected_simple_graphs_upto(int max_v) {
  std::vector<SimpleGraph> out;
  for (int v = 1; v <= max_v; ++v) {
    auto batch = connected_simple_graphs(v);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

Multigraph to_multigraph(const SimpleGraph& g) {
  Multigraph m;
  m.vertices = std::max(g.v, 1);
  for (int i = 0; i < g.v; ++i)
    for (int j = i + 1; j < g.v; ++j)
      if (g.has_edge(i, j))
        m.edges.push_back({i, j, "e" + std::to_string(i) + "-" + std::to_string(j)});
  return m;
}

Matroid fano_matroid() {
  // Points 0..6; lines of the Fano plane.
  const std::vector<std::vector<int>> lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                               {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  std::vector<Mask> circuits;
  for (const auto& l : lines) circuits.push_back(indices_to_mask(l));
  // The complement of each line is a 4-element circuit.
  for (const auto& l : lines) circuits.push_back(full_mask(7) & ~indices_to_mask(l));
  std::vector<std::string> labels;
  for (int i = 0; i < 7; ++i) labels.push_back("f" + std::to_string(i));
  return Matroid::explicit_circuits(std::move(labels), std::move(circuits));
}

Matroid vamos_matroid() {
  // Elements a1 a2 b1 b2 c1 c2 d1 d2 at positions 0..7; the five dependent
  // planes leave {c1 c2 d1 d2} independent.
  const std::vector<std::vector<int>> planes = {
      {0, 1, 2, 3}, {0, 1, 4, 5}, {0, 1, 6, 7}, {2, 3, 4, 5}, {2, 3, 6, 7}};
  std::vector<Mask> circuits;
  for (const auto& p : planes) circuits.push_back(indices_to_mask(p));
  // Every 5-subset containing no dependent plane is a circuit (rank 4).
  const Mask last = full_mask(5) << 3;
  for (Mask m = full_mask(5);; m = next_same_popcount(m)) {
    bool has_plane = false;
    for (const auto& p : planes)
      if (contains(m, indices_to_mask(p))) {
        has_plane = true;
        break;
      }
    if (!has_plane) circuits.push_back(m);
    if (m == last) break;
  }
  std::vector<std::string> labels = {"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"};
  return Matroid::explicit_circuits(std::move(labels), std::move(circuits));
}

std::vector<Fixture> uniform_fixtures(int max_n) {
  std::vector<Fixture> out;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      out.push_back({"U_" + std::to_string(k) + "_" + std::to_string(n), Matroid::uniform(k, n),
                     "uniform matroid"});
  return out;
}

std::vector<Fixture> graph_fixtures(int max_v) {
  std::vector<Fixture> out;
  int idx = 0;
  for (const SimpleGraph& g : connected_simple_graphs_upto(max_v)) {
    Multigraph m = to_multigraph(g);
    std::string base = "G" + std::to_string(g.v) + "_" + std::to_string(idx++) + "_e" +
                       std::to_string(m.edge_count());
    out.push_back({base + "_cycle", cycle_matroid(m), "cycle matroid of a connected graph"});
    out.push_back({base + "_cocycle", cocycle_matroid(m), "cocycle matroid of a connected graph"});
  }
  return out;
}

std::vector<Fixture> matrix_fixtures() {
  auto rat_cols = [](const std::vector<std::vector<int>>& cols) {
    std::vector<std::vector<Rat>> out;
    for (const auto& c : cols) out.emplace_back(c.begin(), c.end());
    return out;
  };
  std::vector<Fixture> out;
  // Moment-curve columns: five points in general position in rank 3.
  {
    std::vector<std::vector<Rat>> cols;
    for (int t = 0; t < 5; ++t) cols.push_back({Rat(1), Rat(t), Rat(t * t)});
    std::vector<std::string> labels;
    for (int i = 0; i < 5; ++i) labels.push_back("m" + std::to_string(i));
    out.push_back({"matrix_moment_3x5", Matroid::linear_rational(cols, labels),
                   "moment-curve columns, isomorphic to U_3_5"});
  }
  // A parallel pair and fractional entries.
  {
    auto cols = rat_cols({{1, 0}, {0, 1}, {1, 1}, {2, 2}});
    cols.push_back({Rat(1, 2), Rat(1, 3)});
    std::vector<std::string> labels = {"x", "y", "d1", "d2", "frac"};
    out.push_back({"matrix_parallel_2x5", Matroid::linear_rational(cols, labels),
                   "rank-2 columns with one parallel pair"});
  }
  return out;
}

std::vector<Fixture> special_fixtures() {
  return {{"fano", fano_matroid(), "Fano plane circuits; representable only in characteristic 2"},
          {"vamos", vamos_matroid(), "Vamos matroid; not representable over any field"}};
}

std::vector<Fixture> full_corpus(int max_v, int max_n) {
  std::vector<Fixture> out = uniform_fixtures(max_n);
  auto graphs = graph_fixtures(max_v);
  out.insert(out.end(), graphs.begin(), graphs.end());
  auto mats = matrix_fixtures();
  out.insert(out.end(), mats.begin(), mats.end());
  auto specials = special_fixtures();
  out.insert(out.end(), specials.begin(), specials.end());
  return out;
}

}  // namespace minv
