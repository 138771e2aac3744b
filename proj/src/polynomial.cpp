#include "minv/polynomial.hpp"

#include <algorithm>

namespace minv {

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int value) {
  IntPolynomial p;
  p.c_.push_back(std::move(value));
  p.trim();
  return p;
}

IntPolynomial IntPolynomial::linear(Int c0, Int c1) {
  IntPolynomial p;
  p.c_.push_back(std::move(c0));
  p.c_.push_back(std::move(c1));
  p.trim();
  return p;
}

IntPolynomial IntPolynomial::monomial(int k, Int coeff) {
  IntPolynomial p;
  p.c_.assign(k + 1, Int(0));
  p.c_[k] = std::move(coeff);
  p.trim();
  return p;
}

Int IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
  return c_[i];
}

IntSeq IntPolynomial::coeffs_high_to_low() const {
  IntSeq out(c_.rbegin(), c_.rend());
  return out;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return zero();
  IntPolynomial r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::scaled(const Int& k) const {
  IntPolynomial r = *this;
  for (auto& x : r.c_) x *= k;
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::times_q_plus(const Int& a) const {
  if (is_zero()) return zero();
  IntPolynomial r;
  r.c_.assign(c_.size() + 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    r.c_[i + 1] += c_[i];
    r.c_[i] += c_[i] * a;
  }
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::shifted(const Int& a) const {
  IntPolynomial r;
  for (int i = degree(); i >= 0; --i) {
    r = r.times_q_plus(a);
    r += constant(c_[i]);
  }
  return r;
}

Int IntPolynomial::eval(const Int& q) const {
  Int acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * q + c_[i];
  return acc;
}

std::pair<IntPolynomial, Int> IntPolynomial::divide_by_q_minus(const Int& root) const {
  if (is_zero()) return {zero(), Int(0)};
  // Synthetic division.
  IntPolynomial quot;
  quot.c_.assign(std::max<size_t>(c_.size() - 1, 0), Int(0));
  Int carry = 0;
  for (int i = degree(); i >= 1; --i) {
    carry = c_[i] + carry * root;
    quot.c_[i - 1] = carry;
  }
  Int rem = c_[0] + carry * root;
  quot.trim();
  return {quot, rem};
}

}  // namespace minv
