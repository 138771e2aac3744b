#pragma once

#include <vector>

#include "minv/matroid.hpp"
#include "minv/ordering.hpp"

namespace minv {

// Explicit downward-closed family of subsets of a ground set, faces encoded
// as bitmasks and sorted numerically. `dim` is the complex dimension used for
// f-vector sizing; builders set it to rank(E)-1 style values so that empty
// complexes (loop matroids) still report vectors of the documented length.
struct FaceComplex {
  GroundSet ground;
  std::vector<Mask> faces;
  int dim = -1;

  bool nonempty() const { return !faces.empty(); }
  bool contains_face(Mask f) const;
  std::vector<Mask> facets() const;
  bool pure() const;
  bool downward_closed() const;
};

// All independent sets; pure of dimension rank(E)-1.
FaceComplex independence_complex(const Matroid& m);

// C minus its least element, for every circuit C; deduplicated, sorted.
// A loop contributes the empty broken circuit.
std::vector<Mask> broken_circuits(const Matroid& m, const Ordering& ordering = {});

// Subsets containing no broken circuit. Empty when the matroid has a loop.
FaceComplex bc_complex(const Matroid& m, const Ordering& ordering = {});

// Faces of the broken circuit complex avoiding the least element of E.
FaceComplex reduced_bc_complex(const Matroid& m, const Ordering& ordering = {});

// Faces plus every face joined with the apex position.
FaceComplex cone(const FaceComplex& base, int apex);

// f_i = number of faces of cardinality i, i = 0..dim+1.
IntSeq f_vector(const FaceComplex& c);

// Coefficient transforms under sum_i f_i (q-1)^{r+1-i} = sum_i h_i q^{r+1-i}.
// Input shorter than r+2 is zero-padded; output has length r+2.
IntSeq f_to_h(const IntSeq& f, int r);
IntSeq h_to_f(const IntSeq& h, int r);

// Counting-only paths (no face materialization), via the subset kernels.
IntSeq in_f_vector(const Matroid& m);
IntSeq bc_f_vector(const Matroid& m, const Ordering& ordering = {});

}  // namespace minv
