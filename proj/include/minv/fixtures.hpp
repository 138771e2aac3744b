#pragma once

#include <string>
#include <vector>

#include "minv/graph_canon.hpp"
#include "minv/matroid.hpp"
#include "minv/multigraph.hpp"

namespace minv {

// Built-in corpus entry. Every fixture carries a representability label (on
// the matroid itself) and a provenance note.
struct Fixture {
  std::string name;
  Matroid matroid;
  std::string note;
};

// All connected simple graphs with exactly v vertices, one per isomorphism
// class, generated by augmenting smaller connected graphs with a new vertex
// and rejecting isomorphs via canonical keys.
std::vector<SimpleGraph> connected_simple_graphs(int v);
std::vector<SimpleGraph> connected_simple_graphs_upto(int max_v);

Multigraph to_multigraph(const SimpleGraph& g);

// Rank-3 matroid on 7 elements whose circuits are the seven lines of the
// Fano plane and their complements. Not representable over the rationals.
Matroid fano_matroid();

// Rank-4 matroid on 8 elements with five 4-point planes; the classic
// non-representable example.
Matroid vamos_matroid();

std::vector<Fixture> uniform_fixtures(int max_n);          // U_{k,n}, 0 <= k <= n <= max_n
std::vector<Fixture> graph_fixtures(int max_v);            // cycle + cocycle matroids
std::vector<Fixture> matrix_fixtures();                    // rational-matrix samples
std::vector<Fixture> special_fixtures();                   // fano, vamos
std::vector<Fixture> full_corpus(int max_v = 6, int max_n = 9);

}  // namespace minv
