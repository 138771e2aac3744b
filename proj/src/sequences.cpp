#include "minv/sequences.hpp"

namespace minv {

bool is_log_concave(const IntSeq& s, int* violation) {
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i - 1] * s[i + 1] > s[i] * s[i]) {
      if (violation) *violation = static_cast<int>(i);
      return false;
    }
  }
  return true;
}

bool is_strictly_log_concave(const IntSeq& s, int* violation) {
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i - 1] * s[i + 1] >= s[i] * s[i]) {
      if (violation) *violation = static_cast<int>(i);
      return false;
    }
  }
  return true;
}

bool has_internal_zeros(const IntSeq& s) {
  size_t first = s.size(), last = 0;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] != 0) {
      if (first == s.size()) first = i;
      last = i;
    }
  if (first == s.size()) return false;
  for (size_t i = first; i <= last; ++i)
    if (s[i] == 0) return true;
  return false;
}

bool is_sign_alternating(const IntSeq& s) {
  size_t last = s.size();
  for (size_t i = s.size(); i-- > 0;)
    if (s[i] != 0) {
      last = i;
      break;
    }
  if (last == s.size()) return true;  // all zero
  for (size_t i = 0; i <= last; ++i) {
    if (s[i] == 0) return false;  // zero before the suffix
    bool positive = s[i] > 0;
    if (positive != (i % 2 == 0)) return false;
  }
  return true;
}

bool is_nonnegative(const IntSeq& s) {
  for (const Int& x : s)
    if (x < 0) return false;
  return true;
}

Verdict analyze_sequence(const IntSeq& s) {
  Verdict v;
  int idx = -1;
  v.log_concave = is_log_concave(s, &idx);
  if (!v.log_concave) {
    v.strictly_log_concave = false;
    v.first_violation = idx;
  } else {
    v.strictly_log_concave = is_strictly_log_concave(s, &idx);
    if (!v.strictly_log_concave) v.first_violation = idx;
  }
  v.internal_zeros = has_internal_zeros(s);
  v.nonnegative = is_nonnegative(s);
  v.sign_alternating = is_sign_alternating(s);
  return v;
}

}  // namespace minv
