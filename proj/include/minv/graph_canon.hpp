#pragma once

#include <cstdint>
#include <vector>

namespace minv {

// Simple graph on at most 10 vertices, adjacency stored as one bitmask per
// vertex. This is the working representation inside the chromatic
// deletion-contraction recursion and the graph-corpus generator.
struct SimpleGraph {
  int v = 0;
  std::vector<std::uint32_t> adj;

  explicit SimpleGraph(int vertices = 0) : v(vertices), adj(vertices, 0) {}

  bool has_edge(int a, int b) const { return (adj[a] >> b) & 1u; }
  void add_edge(int a, int b) {
    adj[a] |= (1u << b);
    adj[b] |= (1u << a);
  }
  void remove_edge(int a, int b) {
    adj[a] &= ~(1u << b);
    adj[b] &= ~(1u << a);
  }
  int degree(int a) const;
  int edge_count() const;
};

// Collision-free canonical key: vertex count plus the upper-triangular
// adjacency bits of a canonically relabeled copy. Two graphs get the same key
// exactly when they are isomorphic. Labels are found by iterated degree
// refinement with individualization on the first non-singleton cell, taking
// the minimum encoding over the search tree.
std::uint64_t canonical_key(const SimpleGraph& g);

}  // namespace minv
