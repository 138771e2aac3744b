#pragma once

#include <utility>

#include "minv/ints.hpp"

namespace minv {

// Dense univariate polynomial with exact integer coefficients, lowest degree
// first. The zero polynomial is the empty coefficient vector; otherwise the
// leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(IntSeq coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(Int value);
  // c0 + c1*q
  static IntPolynomial linear(Int c0, Int c1);
  // q^k
  static IntPolynomial monomial(int k, Int coeff = Int(1));

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int i) const;
  const IntSeq& coeffs() const { return c_; }

  // Coefficients from highest degree down to the constant term, the order in
  // which chromatic-polynomial coefficient sequences are analyzed.
  IntSeq coeffs_high_to_low() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
  IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  IntPolynomial scaled(const Int& k) const;
  // p(q) * (q + a)
  IntPolynomial times_q_plus(const Int& a) const;
  // p(q + a) by Horner over the shifted variable.
  IntPolynomial shifted(const Int& a) const;
  Int eval(const Int& q) const;

  // Exact division by (q - root); returns {quotient, remainder}.
  std::pair<IntPolynomial, Int> divide_by_q_minus(const Int& root) const;

 private:
  void trim();
  IntSeq c_;
};

}  // namespace minv
