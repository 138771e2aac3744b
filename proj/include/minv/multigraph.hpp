#pragma once

#include <string>
#include <vector>

#include "minv/subsets.hpp"

namespace minv {

// Undirected multigraph. Endpoints may coincide (self-loop) and edge pairs may
// repeat (parallel edges). Edges are the matroid elements of the cycle and
// cocycle matroids, so their order is fixed and their labels are distinct.
struct Multigraph {
  struct Edge {
    int u = 0;
    int w = 0;
    std::string label;
  };

  int vertices = 1;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }

  bool has_self_loop() const;
  // Number of connected components of the subgraph on all vertices whose edge
  // set is `kept`.
  int components(Mask kept) const;
  int components_all() const { return components(full_mask(edge_count())); }
  bool connected() const { return components_all() == 1; }
  // Spanning-forest size of the subgraph with edge set `kept`; this is the
  // cycle-matroid rank of the edge subset.
  int forest_rank(Mask kept) const;

  void validate() const;  // distinct labels, v >= 1, endpoints in range

  static Multigraph complete(int v);
  static Multigraph cycle(int v);
  static Multigraph path(int v);
};

}  // namespace minv
