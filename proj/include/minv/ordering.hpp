#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "minv/subsets.hpp"

namespace minv {

// An ordering of the ground set as a priority array: ordering[pos] is the
// rank of the element at position pos, a permutation of 0..n-1. Empty means
// the intrinsic ground-set order.
using Ordering = std::vector<int>;

inline Ordering identity_ordering(int n) {
  Ordering o(n);
  for (int i = 0; i < n; ++i) o[i] = i;
  return o;
}

// Position of the least element of a nonempty subset under the ordering.
inline int least_element(Mask subset, const Ordering& ordering) {
  int best = -1;
  for (int i : mask_to_indices(subset)) {
    if (best < 0) {
      best = i;
      if (ordering.empty()) return best;  // intrinsic order: lowest bit wins
    } else if (ordering[i] < ordering[best]) {
      best = i;
    }
  }
  return best;
}

// Hand-rolled Fisher-Yates so sampled orderings are identical across
// platforms for a given seed.
inline Ordering random_ordering(int n, std::mt19937_64& rng) {
  Ordering o = identity_ordering(n);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % std::uint64_t(i + 1));
    std::swap(o[i], o[j]);
  }
  return o;
}

// The intrinsic ordering followed by `extra` seeded random orderings.
inline std::vector<Ordering> sampled_orderings(int n, int extra, std::uint64_t seed) {
  std::vector<Ordering> out;
  out.push_back(identity_ordering(n));
  std::mt19937_64 rng(seed);
  for (int k = 0; k < extra; ++k) out.push_back(random_ordering(n, rng));
  return out;
}

}  // namespace minv
