#include "minv/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "minv/errors.hpp"
#include "minv/subsets.hpp"

namespace minv {

namespace {

bool proportional(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  // Cross-ratio test: a * b[i] == b * a[i] componentwise.
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

bool all_zero(const std::vector<Rat>& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

// Rank of a small rational matrix: scale rows to integers, then Bareiss.
int rational_rank(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Int>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    Int scale = 1;
    for (const Rat& x : row) scale = lcm(scale, Int(denominator(x)));
    std::vector<Int> r;
    r.reserve(row.size());
    for (const Rat& x : row) r.push_back(Int(numerator(x)) * (scale / Int(denominator(x))));
    a.push_back(std::move(r));
  }
  return bareiss_rank(std::move(a));
}

// Invert a square rational matrix by Gauss-Jordan; throws on singular input.
std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("singular coordinate change");
    std::swap(a[c], a[pivot]);
    std::swap(inv[c], inv[pivot]);
    Rat p = a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] /= p;
      inv[c][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

void CentralArrangement::validate() const {
  if (forms.empty()) throw std::domain_error("empty arrangement");
  for (const auto& f : forms) {
    if (f.size() != forms[0].size()) throw std::domain_error("ragged form lengths");
    if (all_zero(f)) throw std::domain_error("zero form is not a hyperplane");
  }
  for (size_t i = 0; i < forms.size(); ++i)
    for (size_t j = i + 1; j < forms.size(); ++j)
      if (proportional(forms[i], forms[j]))
        throw std::domain_error("forms must define distinct hyperplanes");
}

Matroid CentralArrangement::column_matroid() const {
  std::vector<std::string> names = labels;
  if (names.empty())
    for (int i = 0; i < size(); ++i) names.push_back("H" + std::to_string(i));
  return Matroid::linear_rational(forms, std::move(names));
}

bool AffineArrangement::essential() const {
  std::vector<std::vector<Rat>> lin;
  for (const auto& f : forms) lin.emplace_back(f.begin() + 1, f.end());
  return rational_rank(lin) == dimension();
}

void AffineArrangement::validate() const {
  if (forms.empty()) throw std::domain_error("empty arrangement");
  for (const auto& f : forms) {
    if (f.size() != forms[0].size()) throw std::domain_error("ragged form lengths");
    if (f.size() < 2) throw std::domain_error("affine forms need a constant and a linear part");
    if (all_zero(std::vector<Rat>(f.begin() + 1, f.end())))
      throw std::domain_error("degenerate form: zero linear part");
  }
  for (size_t i = 0; i < forms.size(); ++i)
    for (size_t j = i + 1; j < forms.size(); ++j)
      if (proportional(forms[i], forms[j]))
        throw std::domain_error("forms must define distinct hyperplanes");
}

AffineArrangement decone(const CentralArrangement& a, int infinity_index) {
  a.validate();
  if (infinity_index < 0 || infinity_index >= a.size())
    throw std::domain_error("infinity index out of range");
  const int dim = a.dimension();
  if (a.column_matroid().full_rank() != dim)
    throw std::domain_error("decone requires an essential central arrangement");
  const auto& inf = a.forms[infinity_index];

  // Basis change B with first row the chosen form, completed by unit vectors
  // away from its first nonzero coordinate.
  int pivot = 0;
  while (inf[pivot] == 0) ++pivot;
  std::vector<std::vector<Rat>> b;
  b.push_back(inf);
  for (int j = 0; j < dim; ++j) {
    if (j == pivot) continue;
    std::vector<Rat> unit(dim, Rat(0));
    unit[j] = 1;
    b.push_back(std::move(unit));
  }
  auto binv = invert(std::move(b));

  AffineArrangement out;
  for (int i = 0; i < a.size(); ++i) {
    if (i == infinity_index) continue;
    // New form = old form times B^{-1}; first coordinate dehomogenizes to the
    // constant term.
    std::vector<Rat> nf(dim, Rat(0));
    for (int c = 0; c < dim; ++c)
      for (int k = 0; k < dim; ++k) nf[c] += a.forms[i][k] * binv[k][c];
    out.forms.push_back(std::move(nf));
  }
  out.validate();
  return out;
}

IntPolynomial affine_char_poly(const AffineArrangement& a) {
  a.validate();
  const int n = a.size();
  const int r = a.dimension();
  if (n > 20) throw capacity_error("affine expansion capped at 20 forms");
  IntSeq coeffs(r + 1, Int(0));
  for (Mask s = 0; s < (Mask(1) << n); ++s) {
    std::vector<std::vector<Rat>> lin, aug;
    for (int i : mask_to_indices(s)) {
      lin.emplace_back(a.forms[i].begin() + 1, a.forms[i].end());
      std::vector<Rat> row(a.forms[i].begin() + 1, a.forms[i].end());
      row.push_back(-a.forms[i][0]);
      aug.push_back(std::move(row));
    }
    int rank_lin = rational_rank(lin);
    if (rational_rank(aug) != rank_lin) continue;  // no common point
    coeffs[r - rank_lin] += (popcount(s) % 2 == 0) ? 1 : -1;
  }
  return IntPolynomial(std::move(coeffs));
}

Int bounded_regions_2d(const AffineArrangement& a) {
  a.validate();
  if (a.dimension() != 2)
    throw std::domain_error("unsupported rank: bounded-region counting needs lines in the plane");
  if (!a.essential()) throw std::domain_error("bounded-region counting needs an essential arrangement");

  const int n = a.size();
  std::map<std::pair<Rat, Rat>, int> point_id;
  std::vector<std::vector<int>> on_line(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Rat ai = a.forms[i][1], bi = a.forms[i][2], ci = a.forms[i][0];
      const Rat aj = a.forms[j][1], bj = a.forms[j][2], cj = a.forms[j][0];
      Rat det = ai * bj - aj * bi;
      if (det == 0) continue;  // parallel
      Rat x = (cj * bi - ci * bj) / det;
      Rat y = (aj * ci - ai * cj) / det;
      auto [it, fresh] = point_id.emplace(std::make_pair(x, y), int(point_id.size()));
      int id = it->second;
      (void)fresh;
      on_line[i].push_back(id);
      on_line[j].push_back(id);
    }
  }
  const int v = static_cast<int>(point_id.size());
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  long long bounded_edges = 0;
  for (int i = 0; i < n; ++i) {
    auto& pts = on_line[i];
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) continue;
    bounded_edges += static_cast<long long>(pts.size()) - 1;
    for (size_t k = 1; k < pts.size(); ++k) {
      int ra = find(pts[k - 1]), rb = find(pts[k]);
      if (ra != rb) parent[ra] = rb;
    }
  }
  int components = 0;
  for (int x = 0; x < v; ++x)
    if (find(x) == x) ++components;

  // Euler relation on the bounded part of the subdivision.
  return Int(bounded_edges - v + components);
}

}  // namespace minv
