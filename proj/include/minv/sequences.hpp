#pragma once

#include <optional>

#include "minv/ints.hpp"

namespace minv {

// Property report for an exact integer sequence. first_violation is the first
// interior index breaking log-concavity, or, when only strictness fails, the
// first index where equality holds.
struct Verdict {
  bool log_concave = true;
  bool strictly_log_concave = true;
  bool internal_zeros = false;
  bool nonnegative = true;
  bool sign_alternating = true;
  std::optional<int> first_violation;
};

// e[i-1]*e[i+1] <= e[i]^2 at every interior index. Sequences of length 0 or 1
// hold vacuously.
bool is_log_concave(const IntSeq& s, int* violation = nullptr);
bool is_strictly_log_concave(const IntSeq& s, int* violation = nullptr);

// True iff some zero sits strictly between two nonzero entries.
bool has_internal_zeros(const IntSeq& s);

// Nonzero entries alternate in sign starting positive; zeros only as a suffix.
bool is_sign_alternating(const IntSeq& s);

bool is_nonnegative(const IntSeq& s);

Verdict analyze_sequence(const IntSeq& s);

}  // namespace minv
