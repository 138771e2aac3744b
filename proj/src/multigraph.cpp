#include "minv/multigraph.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace minv {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Returns true if the two roots were distinct.
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }

  std::vector<int> parent;
};

}  // namespace

bool Multigraph::has_self_loop() const {
  for (const auto& e : edges)
    if (e.u == e.w) return true;
  return false;
}

int Multigraph::components(Mask kept) const {
  UnionFind uf(vertices);
  int comps = vertices;
  for (int i = 0; i < edge_count(); ++i) {
    if (!has_bit(kept, i)) continue;
    if (uf.merge(edges[i].u, edges[i].w)) --comps;
  }
  return comps;
}

int Multigraph::forest_rank(Mask kept) const {
  UnionFind uf(vertices);
  int rank = 0;
  for (int i = 0; i < edge_count(); ++i) {
    if (!has_bit(kept, i)) continue;
    if (uf.merge(edges[i].u, edges[i].w)) ++rank;
  }
  return rank;
}

void Multigraph::validate() const {
  if (vertices < 1) throw std::domain_error("multigraph needs at least one vertex");
  std::unordered_set<std::string> seen;
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= vertices || e.w < 0 || e.w >= vertices)
      throw std::domain_error("edge endpoint out of range");
    if (!seen.insert(e.label).second)
      throw std::domain_error("duplicate edge label: " + e.label);
  }
}

static std::string edge_label(int u, int w) {
  return "e" + std::to_string(u) + "-" + std::to_string(w);
}

Multigraph Multigraph::complete(int v) {
  Multigraph g;
  g.vertices = v;
  for (int u = 0; u < v; ++u)
    for (int w = u + 1; w < v; ++w) g.edges.push_back({u, w, edge_label(u, w)});
  return g;
}

Multigraph Multigraph::cycle(int v) {
  Multigraph g;
  g.vertices = v;
  for (int u = 0; u < v; ++u) {
    int w = (u + 1) % v;
    g.edges.push_back({u, w, "e" + std::to_string(u)});
  }
  return g;
}

Multigraph Multigraph::path(int v) {
  Multigraph g;
  g.vertices = v;
  for (int u = 0; u + 1 < v; ++u) g.edges.push_back({u, u + 1, "e" + std::to_string(u)});
  return g;
}

}  // namespace minv
