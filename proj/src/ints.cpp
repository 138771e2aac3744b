#include "minv/ints.hpp"

#include <stdexcept>

namespace minv {

std::string to_decimal(const Int& x) { return x.str(); }

Int parse_int(const std::string& s) {
  if (s.empty()) throw std::domain_error("empty integer literal");
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw std::domain_error("bad integer literal: " + s);
  }
}

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::domain_error("zero denominator in rational: " + s);
  return Rat(num, den);
}

std::string rational_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace minv
