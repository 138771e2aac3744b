#include "minv/flats.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "minv/complexes.hpp"
#include "minv/errors.hpp"
#include "minv/kernels.hpp"

namespace minv {

FlatLattice flat_lattice(const Matroid& m) {
  if (m.size() > kMaxGroundSize)
    throw capacity_error("flat enumeration capped at " + std::to_string(kMaxGroundSize) +
                         " elements");
  // Every flat is the closure of any of its bases, so closures of independent
  // sets cover the lattice without walking all 2^n subsets.
  std::unordered_set<Mask> seen;
  std::vector<Flat> flats;
  std::vector<std::pair<Mask, int>> stack;
  stack.push_back({0, 0});
  while (!stack.empty()) {
    auto [indep, from] = stack.back();
    stack.pop_back();
    Mask cl = m.closure(indep);
    if (seen.insert(cl).second) flats.push_back({cl, m.rank(cl), Int(0)});
    for (int e = from; e < m.size(); ++e) {
      Mask next = indep | (Mask(1) << e);
      if (m.rank(next) == popcount(next)) stack.push_back({next, e + 1});
    }
  }
  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.elements < b.elements;
  });
  // Mobius recursion from the bottom flat; proper subflats always precede a
  // flat in (rank, elements) order.
  for (size_t i = 0; i < flats.size(); ++i) {
    if (i == 0) {
      flats[i].mobius = 1;
      continue;
    }
    Int sum = 0;
    for (size_t j = 0; j < i; ++j)
      if (contains(flats[i].elements, flats[j].elements)) sum += flats[j].mobius;
    flats[i].mobius = -sum;
  }
  FlatLattice lat;
  lat.bottom = flats.front().elements;
  lat.top_rank = m.full_rank();
  lat.flats = std::move(flats);
  return lat;
}

IntPolynomial char_poly(const Matroid& m) {
  if (m.loops() != 0) return IntPolynomial::zero();
  FlatLattice lat = flat_lattice(m);
  IntSeq coeffs(m.full_rank() + 1, Int(0));
  for (const Flat& f : lat.flats) coeffs[m.full_rank() - f.rank] += f.mobius;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial char_poly_boolean(const Matroid& m) {
  if (m.size() > kMaxGroundSize)
    throw capacity_error("boolean expansion capped at " + std::to_string(kMaxGroundSize) +
                         " elements");
  auto counts = kernels::rank_card_count(m.size(), m.full_rank(),
                                         [&](Mask s) { return m.rank(s); });
  IntSeq coeffs(m.full_rank() + 1, Int(0));
  for (int rho = 0; rho <= m.full_rank(); ++rho) {
    Int signed_sum = 0;
    for (int c = 0; c <= m.size(); ++c) {
      Int term(counts[rho][c]);
      signed_sum += (c % 2 == 0) ? term : -term;
    }
    coeffs[m.full_rank() - rho] += signed_sum;
  }
  return IntPolynomial(std::move(coeffs));
}

WhitneyResult whitney_numbers(const Matroid& m) {
  const int len = m.full_rank() + 1;
  if (m.loops() != 0) return {IntSeq(len, Int(0)), false};
  IntPolynomial chi = char_poly(m);
  IntSeq w(len, Int(0));
  for (int i = 0; i < len; ++i) {
    Int c = chi.coeff(m.full_rank() - i);
    w[i] = (i % 2 == 0) ? c : -c;
  }
  return {std::move(w), true};
}

IntSeq nbc_counts(const Matroid& m, const Ordering& ordering) {
  if (m.size() > kMaxGroundSize)
    throw capacity_error("NBC counting capped at " + std::to_string(kMaxGroundSize) +
                         " elements");
  auto bcs = broken_circuits(m, ordering);
  auto counts = kernels::nbc_count(m.size(), bcs);
  IntSeq out(m.full_rank() + 1, Int(0));
  for (int c = 0; c <= m.full_rank() && c <= m.size(); ++c) out[c] = Int(counts[c]);
  return out;
}

IntPolynomial reduced_char_poly(const Matroid& m) {
  if (m.loops() != 0) return IntPolynomial::zero();
  if (m.size() == 0)
    throw std::domain_error("the empty matroid has no reduced characteristic polynomial");
  auto [quot, rem] = char_poly(m).divide_by_q_minus(Int(1));
  if (rem != 0)
    throw invariant_violation("characteristic polynomial not divisible by q-1");
  return quot;
}

IntSeq bc_h_from_charpoly(const Matroid& m) {
  const int rank = m.full_rank();
  if (m.size() == 0) return IntSeq{Int(1)};
  if (m.loops() != 0) return IntSeq(rank + 1, Int(0));
  IntPolynomial shifted = reduced_char_poly(m).shifted(Int(1));
  IntSeq h(rank + 1, Int(0));
  for (int i = 0; i < rank; ++i) {
    Int c = shifted.coeff(rank - 1 - i);
    h[i] = (i % 2 == 0) ? c : -c;
  }
  return h;  // h[rank] stays zero
}

}  // namespace minv
