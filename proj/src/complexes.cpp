#include "minv/complexes.hpp"

#include <algorithm>

#include "minv/errors.hpp"
#include "minv/kernels.hpp"
#include "minv/polynomial.hpp"

namespace minv {

bool FaceComplex::contains_face(Mask f) const {
  return std::binary_search(faces.begin(), faces.end(), f);
}

std::vector<Mask> FaceComplex::facets() const {
  std::vector<Mask> out;
  const int n = ground.size();
  for (Mask f : faces) {
    bool maximal = true;
    for (int e = 0; e < n && maximal; ++e)
      if (!has_bit(f, e) && contains_face(f | (Mask(1) << e))) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

bool FaceComplex::pure() const {
  auto fs = facets();
  for (const Mask f : fs)
    if (popcount(f) != popcount(fs.front())) return false;
  return true;
}

bool FaceComplex::downward_closed() const {
  for (Mask f : faces)
    for (int e : mask_to_indices(f))
      if (!contains_face(f & ~(Mask(1) << e))) return false;
  return true;
}

namespace {

void check_capacity(const Matroid& m) {
  if (m.size() > kMaxGroundSize)
    throw capacity_error("face enumeration capped at " + std::to_string(kMaxGroundSize) +
                         " elements");
}

// Depth-first extension by larger elements; keep(face, e) decides whether
// face|e stays in the family. Visits exactly the family when it is downward
// closed under the predicate.
template <typename Keep>
std::vector<Mask> grow_faces(int n, const Keep& keep) {
  std::vector<Mask> out;
  std::vector<std::pair<Mask, int>> stack;
  out.push_back(0);
  stack.push_back({0, 0});
  while (!stack.empty()) {
    auto [face, from] = stack.back();
    stack.pop_back();
    for (int e = from; e < n; ++e) {
      if (keep(face, e)) {
        Mask next = face | (Mask(1) << e);
        out.push_back(next);
        stack.push_back({next, e + 1});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FaceComplex independence_complex(const Matroid& m) {
  check_capacity(m);
  FaceComplex c;
  c.ground = m.ground();
  c.dim = m.full_rank() - 1;
  c.faces = grow_faces(m.size(), [&](Mask face, int e) {
    Mask next = face | (Mask(1) << e);
    return m.rank(next) == popcount(next);
  });
  return c;
}

std::vector<Mask> broken_circuits(const Matroid& m, const Ordering& ordering) {
  std::vector<Mask> out;
  for (Mask c : m.circuits()) out.push_back(c & ~(Mask(1) << least_element(c, ordering)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FaceComplex bc_complex(const Matroid& m, const Ordering& ordering) {
  check_capacity(m);
  FaceComplex c;
  c.ground = m.ground();
  c.dim = m.full_rank() - 1;
  auto bcs = broken_circuits(m, ordering);
  if (!bcs.empty() && bcs.front() == 0) return c;  // loop: every subset is out
  // Bucket broken circuits by their largest element; growing faces in
  // ascending element order means only those buckets can newly apply.
  std::vector<std::vector<Mask>> by_max(m.size());
  for (Mask b : bcs) by_max[31 - std::countl_zero(b)].push_back(b);
  c.faces = grow_faces(m.size(), [&](Mask face, int e) {
    Mask next = face | (Mask(1) << e);
    for (Mask b : by_max[e])
      if (contains(next, b)) return false;
    return true;
  });
  return c;
}

FaceComplex reduced_bc_complex(const Matroid& m, const Ordering& ordering) {
  FaceComplex full = bc_complex(m, ordering);
  FaceComplex c;
  c.ground = full.ground;
  c.dim = std::max(m.full_rank() - 2, -1);
  if (m.size() == 0) {
    c.faces = full.faces;  // nothing to exclude
    return c;
  }
  Mask least = Mask(1) << least_element(m.full_set(), ordering);
  for (Mask f : full.faces)
    if (!(f & least)) c.faces.push_back(f);
  return c;
}

FaceComplex cone(const FaceComplex& base, int apex) {
  FaceComplex c;
  c.ground = base.ground;
  c.dim = base.nonempty() ? base.dim + 1 : base.dim;
  Mask abit = Mask(1) << apex;
  for (Mask f : base.faces) {
    c.faces.push_back(f);
    c.faces.push_back(f | abit);
  }
  std::sort(c.faces.begin(), c.faces.end());
  c.faces.erase(std::unique(c.faces.begin(), c.faces.end()), c.faces.end());
  return c;
}

IntSeq f_vector(const FaceComplex& c) {
  IntSeq f(std::max(c.dim + 2, 0), Int(0));
  for (Mask face : c.faces) ++f[popcount(face)];
  return f;
}

IntSeq f_to_h(const IntSeq& f, int r) {
  IntPolynomial p;
  for (int i = 0; i <= r + 1; ++i) {
    p = p.times_q_plus(Int(-1));
    if (i < static_cast<int>(f.size())) p += IntPolynomial::constant(f[i]);
  }
  IntSeq h(r + 2, Int(0));
  for (int i = 0; i <= r + 1; ++i) h[i] = p.coeff(r + 1 - i);
  return h;
}

IntSeq h_to_f(const IntSeq& h, int r) {
  IntSeq coeffs(r + 2, Int(0));
  for (int i = 0; i <= r + 1; ++i)
    if (i < static_cast<int>(h.size())) coeffs[r + 1 - i] = h[i];
  IntPolynomial p = IntPolynomial(std::move(coeffs)).shifted(Int(1));
  IntSeq f(r + 2, Int(0));
  for (int i = 0; i <= r + 1; ++i) f[i] = p.coeff(r + 1 - i);
  return f;
}

IntSeq in_f_vector(const Matroid& m) {
  check_capacity(m);
  auto counts = kernels::rank_card_count(m.size(), m.full_rank(),
                                         [&](Mask s) { return m.rank(s); });
  IntSeq f(m.full_rank() + 1, Int(0));
  for (int c = 0; c <= m.full_rank(); ++c) f[c] = Int(counts[c][c]);
  return f;
}

IntSeq bc_f_vector(const Matroid& m, const Ordering& ordering) {
  check_capacity(m);
  auto bcs = broken_circuits(m, ordering);
  auto counts = kernels::nbc_count(m.size(), bcs);
  IntSeq f(m.full_rank() + 1, Int(0));
  for (int c = 0; c <= m.full_rank() && c <= m.size(); ++c) f[c] = Int(counts[c]);
  return f;
}

}  // namespace minv
