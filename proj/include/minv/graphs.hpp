#pragma once

#include "minv/matroid.hpp"
#include "minv/multigraph.hpp"
#include "minv/polynomial.hpp"

namespace minv {

Matroid cycle_matroid(const Multigraph& g);
Matroid cocycle_matroid(const Multigraph& g);

struct ChromaticData {
  IntPolynomial poly;
  int components = 0;
};

// Exact chromatic polynomial. Self-loops give the zero polynomial; parallel
// edges collapse. Runs deletion-contraction with a memo table keyed by the
// canonical graph form (shared across calls, idempotent under concurrent
// insertion), switching to the characteristic polynomial of the cycle matroid
// for dense inputs.
ChromaticData chromatic_polynomial(const Multigraph& g);

struct ReliabilityData {
  IntSeq f;  // f[i] = number of cardinality-i edge sets whose removal keeps G connected
  IntSeq h;  // defined by Rel(p) = p^(v-1) * sum h_i (1-p)^i
  int e = 0;
  int v = 1;
};

// Requires a connected graph without self-loops; edge sets are enumerated
// exhaustively (capacity error past 24 edges).
ReliabilityData reliability_data(const Multigraph& g);

}  // namespace minv
