#pragma once

#include <string>
#include <vector>

#include "minv/ints.hpp"
#include "minv/matroid.hpp"
#include "minv/polynomial.hpp"

namespace minv {

// Central arrangement given by one exact-rational linear form per hyperplane,
// all in the same number of variables. Forms must be pairwise non-proportional
// and nonzero, and the arrangement must be essential (its column matroid has
// rank equal to the variable count) for deconing.
struct CentralArrangement {
  std::vector<std::vector<Rat>> forms;
  std::vector<std::string> labels;

  int dimension() const { return forms.empty() ? 0 : static_cast<int>(forms[0].size()); }
  int size() const { return static_cast<int>(forms.size()); }
  void validate() const;
  Matroid column_matroid() const;
};

// Affine arrangement: forms[i] = [c, a_1, ..., a_r] meaning c + a.x = 0.
struct AffineArrangement {
  std::vector<std::vector<Rat>> forms;

  int dimension() const { return forms.empty() ? 0 : static_cast<int>(forms[0].size()) - 1; }
  int size() const { return static_cast<int>(forms.size()); }
  // Linear parts span the full dual space.
  bool essential() const;
  void validate() const;
};

// Change coordinates so the chosen form becomes the first coordinate, then
// set it to one. The characteristic polynomial of the result equals the
// reduced characteristic polynomial of the column matroid, for every choice.
AffineArrangement decone(const CentralArrangement& a, int infinity_index);

// Whitney-style expansion over subsets with a common solution:
// sum (-1)^|S| q^(r - rank of linear parts of S).
IntPolynomial affine_char_poly(const AffineArrangement& a);

// Exact number of bounded regions of a real essential line arrangement,
// from its planar subdivision: bounded segments minus vertices plus
// connected components.
Int bounded_regions_2d(const AffineArrangement& a);

}  // namespace minv
