#pragma once

#include <vector>

#include "minv/matroid.hpp"
#include "minv/ordering.hpp"
#include "minv/polynomial.hpp"

namespace minv {

// Lattice of flats with Mobius values measured from the bottom flat.
struct Flat {
  Mask elements = 0;
  int rank = 0;
  Int mobius;
};

struct FlatLattice {
  std::vector<Flat> flats;  // sorted by (rank, elements)
  Mask bottom = 0;          // closure of the empty set
  int top_rank = 0;
};

FlatLattice flat_lattice(const Matroid& m);

// sum over flats of mu * q^(r+1-rank); the zero polynomial when the matroid
// has a loop.
IntPolynomial char_poly(const Matroid& m);

// Independent oracle for the same polynomial:
// sum over all subsets S of (-1)^|S| q^(r+1-rank(S)).
IntPolynomial char_poly_boolean(const Matroid& m);

struct WhitneyResult {
  IntSeq w;       // unsigned coefficients, w[i] pairs with q^(r+1-i)
  bool loopless;  // false means w is all-zero by convention
};
WhitneyResult whitney_numbers(const Matroid& m);

// Per-cardinality counts of subsets containing no broken circuit, sizes
// 0..r+1. Equals whitney_numbers for every ordering of a loopless matroid.
IntSeq nbc_counts(const Matroid& m, const Ordering& ordering = {});

// char_poly / (q-1), exact. Zero for loop matroids; a nonzero remainder is an
// internal invariant violation. The empty matroid has no reduced polynomial.
IntPolynomial reduced_char_poly(const Matroid& m);

// h-vector of the broken circuit complex read off the reduced characteristic
// polynomial at q+1; length r+2 with the last entry zero.
IntSeq bc_h_from_charpoly(const Matroid& m);

}  // namespace minv
