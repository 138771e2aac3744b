#pragma once

#include <stdexcept>
#include <string>

namespace minv {

// Raised when an enumeration would exceed the configured desk-scale caps
// (ground sets over 24 elements, face families over 2^24).
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an identity that must hold exactly fails inside the library,
// e.g. a nonzero remainder when dividing a characteristic polynomial by q-1.
class invariant_violation : public std::logic_error {
 public:
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace minv
