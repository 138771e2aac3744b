#pragma once

#include <string>
#include <vector>

#include "minv/complexes.hpp"
#include "minv/matroid.hpp"
#include "minv/sequences.hpp"

namespace minv {

// Per-matroid verdict block: h-vectors of the independence and broken circuit
// complexes (the latter under each supplied ordering), f-vectors, unsigned
// Whitney numbers, and the log-concavity verdicts. Non-Q-representable
// matroids are labeled as conjecture checks rather than theorem checks.
struct TheoremReport {
  std::string name;
  std::string note;
  bool representable = false;
  std::string label;
  int n = 0;     // number of elements
  int rank = 0;  // rank of the full ground set
  bool has_loops = false;

  IntSeq f_in, h_in;
  std::vector<IntSeq> f_bc, h_bc;  // one per ordering
  IntSeq whitney_abs;
  bool bc_ordering_invariant = true;

  Verdict v_h_in, v_f_in;
  Verdict v_h_bc, v_f_bc;  // evaluated on every ordering; a failure anywhere shows here

  // Log-concave + nonnegative + no internal zeros for both h-vectors, strict
  // log-concavity for both f-vectors, and ordering invariance.
  bool pass = false;
};

TheoremReport theorem_report(const Matroid& m, const std::vector<Ordering>& orderings,
                             std::string name = "", std::string note = "");

}  // namespace minv
