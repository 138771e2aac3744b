#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace minv {

// Element subsets are encoded as bitmasks over ground-set positions.
// Position i (the i-th label in ground-set order) is bit i. The caps in
// errors.hpp keep every ground set within 24 bits.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 24;

inline int popcount(Mask m) { return std::popcount(m); }

inline bool contains(Mask super, Mask sub) { return (sub & ~super) == 0; }

inline Mask full_mask(int n) { return n == 0 ? 0u : (Mask(~0u) >> (32 - n)); }

inline bool has_bit(Mask m, int i) { return (m >> i) & 1u; }

// Next mask with the same popcount in increasing numeric order (Gosper).
inline Mask next_same_popcount(Mask m) {
  Mask c = m & (0u - m);
  Mask r = m + c;
  return (((r ^ m) >> 2) / c) | r;
}

inline std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

inline Mask indices_to_mask(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= (Mask(1) << i);
  return m;
}

}  // namespace minv
