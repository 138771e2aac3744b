#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace minv {

// All invariant computations run over exact arbitrary-precision integers and
// rationals. Rationals are kept normalized (coprime, positive denominator) by
// the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact integer sequence, indexed 0..len-1.
using IntSeq = std::vector<Int>;

std::string to_decimal(const Int& x);
Int parse_int(const std::string& s);

// Accepts "num" or "num/den" with optional sign.
Rat parse_rational(const std::string& s);
std::string rational_string(const Rat& x);

}  // namespace minv
