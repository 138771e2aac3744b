#include "minv/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "minv/errors.hpp"
#include "minv/kernels.hpp"

namespace minv {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (int i = 0; i < size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw std::domain_error("duplicate ground-set label: " + labels_[i]);
  }
}

int GroundSet::index_of(const std::string& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw std::domain_error("element not in ground set: " + s);
  return it->second;
}

namespace detail {

class RankBackend {
 public:
  virtual ~RankBackend() = default;
  virtual int rank(Mask s) const = 0;
};

struct MatroidCore {
  GroundSet ground;
  std::unique_ptr<const RankBackend> backend;
  bool representable = false;
  int full_rank = 0;

  mutable std::once_flag circuits_once;
  mutable std::vector<Mask> circuits;
};

namespace {

class UniformBackend final : public RankBackend {
 public:
  explicit UniformBackend(int k) : k_(k) {}
  int rank(Mask s) const override { return std::min(popcount(s), k_); }

 private:
  int k_;
};

class GraphicBackend final : public RankBackend {
 public:
  explicit GraphicBackend(Multigraph g) : g_(std::move(g)) {}
  int rank(Mask s) const override { return g_.forest_rank(s); }

 private:
  Multigraph g_;
};

class LinearBackend final : public RankBackend {
 public:
  // Columns arrive as exact rationals; scaling a column by the lcm of its
  // denominators preserves rank and lets elimination stay over integers.
  explicit LinearBackend(const std::vector<std::vector<Rat>>& columns) {
    for (const auto& col : columns) {
      Int scale = 1;
      for (const auto& x : col) scale = lcm(scale, Int(denominator(x)));
      std::vector<Int> c;
      c.reserve(col.size());
      for (const auto& x : col) c.push_back(Int(numerator(x)) * (scale / Int(denominator(x))));
      cols_.push_back(std::move(c));
    }
  }

  int rank(Mask s) const override {
    std::vector<std::vector<Int>> sel;
    for (int i : mask_to_indices(s)) sel.push_back(cols_[i]);
    if (sel.empty()) return 0;
    // bareiss_rank expects rows; transpose the selected columns.
    size_t rows = sel[0].size();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(sel.size()));
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < sel.size(); ++c) a[r][c] = sel[c][r];
    return bareiss_rank(std::move(a));
  }

 private:
  std::vector<std::vector<Int>> cols_;
};

class CircuitsBackend final : public RankBackend {
 public:
  explicit CircuitsBackend(std::vector<Mask> circuits) : circuits_(std::move(circuits)) {}

  int rank(Mask s) const override {
    // Greedy: grow an independent subset of s in element order. Independence
    // augmentation makes the greedy size the rank.
    Mask indep = 0;
    for (Mask rest = s; rest;) {
      Mask bit = rest & (0u - rest);
      rest &= rest - 1;
      Mask cand = indep | bit;
      bool dependent = false;
      for (Mask c : circuits_)
        if (contains(cand, c)) {
          dependent = true;
          break;
        }
      if (!dependent) indep = cand;
    }
    return popcount(indep);
  }

 private:
  std::vector<Mask> circuits_;
};

class DualBackend final : public RankBackend {
 public:
  explicit DualBackend(Matroid inner) : inner_(std::move(inner)) {}
  int rank(Mask s) const override {
    return popcount(s) + inner_.rank(inner_.full_set() & ~s) - inner_.full_rank();
  }

 private:
  Matroid inner_;
};

// New element appended after the inner ground set, in general position.
class FreeExtBackend final : public RankBackend {
 public:
  explicit FreeExtBackend(Matroid inner)
      : inner_(std::move(inner)), p_bit_(Mask(1) << inner_.size()) {}

  int rank(Mask s) const override {
    int base = inner_.rank(s & ~p_bit_);
    if (!(s & p_bit_)) return base;
    return std::min(base + 1, inner_.full_rank());
  }

 private:
  Matroid inner_;
  Mask p_bit_;
};

class RelabelBackend final : public RankBackend {
 public:
  // inner_pos_[new position] = inner position.
  RelabelBackend(Matroid inner, std::vector<int> inner_pos)
      : inner_(std::move(inner)), inner_pos_(std::move(inner_pos)) {}

  int rank(Mask s) const override {
    Mask t = 0;
    for (int i : mask_to_indices(s)) t |= Mask(1) << inner_pos_[i];
    return inner_.rank(t);
  }

 private:
  Matroid inner_;
  std::vector<int> inner_pos_;
};

class RestrictBackend final : public RankBackend {
 public:
  RestrictBackend(Matroid inner, std::vector<int> kept)
      : inner_(std::move(inner)), kept_(std::move(kept)) {}

  int rank(Mask s) const override {
    Mask t = 0;
    for (int i : mask_to_indices(s)) t |= Mask(1) << kept_[i];
    return inner_.rank(t);
  }

 private:
  Matroid inner_;
  std::vector<int> kept_;
};

// New last element parallel to src: rank is computed after identifying it
// with src.
class ParallelBackend final : public RankBackend {
 public:
  ParallelBackend(Matroid inner, int src)
      : inner_(std::move(inner)), src_bit_(Mask(1) << src), p_bit_(Mask(1) << inner_.size()) {}

  int rank(Mask s) const override {
    Mask t = s & ~p_bit_;
    if (s & p_bit_) t |= src_bit_;
    return inner_.rank(t);
  }

 private:
  Matroid inner_;
  Mask src_bit_;
  Mask p_bit_;
};

std::vector<std::string> default_labels(int n, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::shared_ptr<const MatroidCore> make_core(GroundSet ground,
                                             std::unique_ptr<const RankBackend> backend,
                                             bool representable) {
  if (ground.size() > 32)
    throw capacity_error("ground sets beyond 32 elements are unsupported");
  auto core = std::make_shared<MatroidCore>();
  core->ground = std::move(ground);
  core->backend = std::move(backend);
  core->representable = representable;
  core->full_rank = core->backend->rank(full_mask(core->ground.size()));
  return core;
}

bool circuit_lex_less(Mask a, Mask b) {
  Mask d = a ^ b;
  if (!d) return false;
  Mask low = d & (0u - d);
  return (a & low) != 0;
}

void validate_circuit_axioms(const std::vector<Mask>& circuits, int n) {
  for (Mask c : circuits) {
    if (c == 0) throw std::domain_error("empty circuit");
    if (c & ~full_mask(n)) throw std::domain_error("circuit element out of range");
  }
  for (size_t i = 0; i < circuits.size(); ++i)
    for (size_t j = 0; j < circuits.size(); ++j) {
      if (i == j) continue;
      if (contains(circuits[i], circuits[j]))
        throw std::domain_error("circuit family is not an antichain");
    }
  if (n > 12) return;  // full elimination check is exponential; trust above
  for (size_t i = 0; i < circuits.size(); ++i)
    for (size_t j = i + 1; j < circuits.size(); ++j) {
      Mask common = circuits[i] & circuits[j];
      if (!common) continue;
      for (int e : mask_to_indices(common)) {
        Mask u = (circuits[i] | circuits[j]) & ~(Mask(1) << e);
        bool found = false;
        for (Mask c : circuits)
          if (contains(u, c)) {
            found = true;
            break;
          }
        if (!found) throw std::domain_error("circuit elimination axiom fails");
      }
    }
}

}  // namespace
}  // namespace detail

Matroid::Matroid()
    : core_(detail::make_core(GroundSet(std::vector<std::string>{}),
                              std::make_unique<detail::UniformBackend>(0), true)) {}

Matroid::Matroid(std::shared_ptr<const detail::MatroidCore> core) : core_(std::move(core)) {}

Matroid Matroid::uniform(int rank, int size) {
  return uniform(rank, size, detail::default_labels(size, "e"));
}

Matroid Matroid::uniform(int rank, int size, std::vector<std::string> labels) {
  if (rank < 0 || rank > size) throw std::domain_error("uniform matroid needs 0 <= rank <= size");
  if (static_cast<int>(labels.size()) != size)
    throw std::domain_error("label count does not match size");
  return Matroid(detail::make_core(GroundSet(std::move(labels)),
                                   std::make_unique<detail::UniformBackend>(rank), true));
}

Matroid Matroid::linear_rational(std::vector<std::vector<Rat>> columns,
                                 std::vector<std::string> labels) {
  if (labels.size() != columns.size())
    throw std::domain_error("label count does not match column count");
  size_t rows = columns.empty() ? 0 : columns[0].size();
  for (const auto& c : columns)
    if (c.size() != rows) throw std::domain_error("ragged column lengths");
  return Matroid(detail::make_core(GroundSet(std::move(labels)),
                                   std::make_unique<detail::LinearBackend>(columns), true));
}

Matroid Matroid::graphic(Multigraph g) {
  g.validate();
  std::vector<std::string> labels;
  labels.reserve(g.edges.size());
  for (const auto& e : g.edges) labels.push_back(e.label);
  return Matroid(detail::make_core(GroundSet(std::move(labels)),
                                   std::make_unique<detail::GraphicBackend>(std::move(g)), true));
}

Matroid Matroid::explicit_circuits(std::vector<std::string> labels, std::vector<Mask> circuits) {
  detail::validate_circuit_axioms(circuits, static_cast<int>(labels.size()));
  return Matroid(detail::make_core(GroundSet(std::move(labels)),
                                   std::make_unique<detail::CircuitsBackend>(std::move(circuits)),
                                   false));
}

const GroundSet& Matroid::ground() const { return core_->ground; }

int Matroid::full_rank() const { return core_->full_rank; }

bool Matroid::representable_over_q() const { return core_->representable; }

int Matroid::rank(Mask subset) const {
  if (subset & ~full_set()) throw std::domain_error("element not in ground set");
  return core_->backend->rank(subset);
}

const std::vector<Mask>& Matroid::circuits() const {
  std::call_once(core_->circuits_once, [this] {
    const int n = size();
    if (n > kMaxGroundSize)
      throw capacity_error("circuit enumeration capped at " + std::to_string(kMaxGroundSize) +
                           " elements");
    std::vector<Mask> found;
    for (int s = 1; s <= n; ++s) {
      Mask m = full_mask(s);
      Mask last = n == s ? m : Mask(m << (n - s));
      for (;; m = next_same_popcount(m)) {
        bool has_sub = false;
        for (Mask c : found)
          if (contains(m, c)) {
            has_sub = true;
            break;
          }
        if (!has_sub && rank(m) < s) found.push_back(m);
        if (m == last) break;
      }
    }
    std::sort(found.begin(), found.end(), detail::circuit_lex_less);
    core_->circuits = std::move(found);
  });
  return core_->circuits;
}

Mask Matroid::closure(Mask subset) const {
  int r = rank(subset);
  Mask out = subset;
  for (int e = 0; e < size(); ++e) {
    if (has_bit(subset, e)) continue;
    if (rank(subset | (Mask(1) << e)) == r) out |= Mask(1) << e;
  }
  return out;
}

Mask Matroid::loops() const { return closure(0); }

std::vector<Mask> Matroid::parallel_classes() const {
  Mask loop = loops();
  std::vector<Mask> classes;
  Mask assigned = 0;
  for (int e = 0; e < size(); ++e) {
    Mask ebit = Mask(1) << e;
    if ((loop & ebit) || (assigned & ebit)) continue;
    Mask cls = ebit;
    for (int f = e + 1; f < size(); ++f) {
      Mask fbit = Mask(1) << f;
      if ((loop & fbit) || (assigned & fbit)) continue;
      if (rank(ebit | fbit) == 1) cls |= fbit;
    }
    assigned |= cls;
    classes.push_back(cls);
  }
  return classes;
}

Matroid Matroid::simplify() const {
  Mask keep = 0;
  for (Mask cls : parallel_classes()) keep |= cls & (0u - cls);  // first element
  return restrict_to(keep);
}

Matroid Matroid::restrict_to(Mask keep) const {
  if (keep & ~full_set()) throw std::domain_error("element not in ground set");
  std::vector<int> kept = mask_to_indices(keep);
  std::vector<std::string> labels;
  labels.reserve(kept.size());
  for (int i : kept) labels.push_back(ground().label(i));
  return Matroid(detail::make_core(GroundSet(std::move(labels)),
                                   std::make_unique<detail::RestrictBackend>(*this, std::move(kept)),
                                   representable_over_q()));
}

Matroid Matroid::dual() const {
  return Matroid(detail::make_core(ground(), std::make_unique<detail::DualBackend>(*this),
                                   representable_over_q()));
}

Matroid Matroid::free_extension(const std::string& p) const {
  if (ground().has_label(p)) throw std::domain_error("duplicate label: " + p);
  std::vector<std::string> labels = ground().labels();
  labels.push_back(p);
  return Matroid(detail::make_core(GroundSet(std::move(labels)),
                                   std::make_unique<detail::FreeExtBackend>(*this),
                                   representable_over_q()));
}

Matroid Matroid::free_dual_extension(const std::string& p) const {
  Matroid inner = dual().free_extension(p).dual();
  // Reorder so p is the smallest element, ahead of the original ground set.
  std::vector<std::string> labels;
  labels.reserve(size() + 1);
  labels.push_back(p);
  for (const auto& l : ground().labels()) labels.push_back(l);
  std::vector<int> inner_pos(size() + 1);
  inner_pos[0] = size();
  for (int i = 0; i < size(); ++i) inner_pos[i + 1] = i;
  return Matroid(detail::make_core(GroundSet(std::move(labels)),
                                   std::make_unique<detail::RelabelBackend>(std::move(inner),
                                                                            std::move(inner_pos)),
                                   representable_over_q()));
}

Matroid Matroid::add_parallel(int element, const std::string& label) const {
  if (element < 0 || element >= size()) throw std::domain_error("element out of range");
  if (ground().has_label(label)) throw std::domain_error("duplicate label: " + label);
  std::vector<std::string> labels = ground().labels();
  labels.push_back(label);
  return Matroid(detail::make_core(GroundSet(std::move(labels)),
                                   std::make_unique<detail::ParallelBackend>(*this, element),
                                   representable_over_q()));
}

std::vector<std::uint8_t> rank_table(const Matroid& m) {
  if (m.size() > 20) throw capacity_error("rank tables capped at 20 elements");
  return kernels::rank_table(m.size(), [&](Mask s) { return m.rank(s); });
}

int bareiss_rank(std::vector<std::vector<Int>> a) {
  if (a.empty() || a[0].empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  Int prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace minv
