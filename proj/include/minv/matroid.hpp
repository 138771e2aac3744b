#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "minv/ints.hpp"
#include "minv/multigraph.hpp"
#include "minv/subsets.hpp"

namespace minv {

// Ordered ground set of distinct element labels. The label sequence order is
// the element ordering: broken circuits, reduced complexes and free dual
// extensions all read "least element" from it.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_label(const std::string& s) const { return index_.count(s) > 0; }
  int index_of(const std::string& s) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
};

namespace detail {
class RankBackend;
struct MatroidCore;
}  // namespace detail

// Immutable matroid value: an ordered ground set plus a rank oracle. Concrete
// representations (uniform, graphic, exact-rational columns, explicit
// circuits) and lazy constructions (dual, free extension, restriction,
// parallel extension) all sit behind the same oracle interface. Copies share
// state; all queries are const and safe to issue concurrently.
class Matroid {
 public:
  Matroid();  // the empty matroid: no elements, rank 0

  static Matroid uniform(int rank, int size);
  static Matroid uniform(int rank, int size, std::vector<std::string> labels);
  // One column of exact rationals per element.
  static Matroid linear_rational(std::vector<std::vector<Rat>> columns,
                                 std::vector<std::string> labels);
  static Matroid graphic(Multigraph g);
  // Validates the circuit axioms exhaustively for ground sets of at most 12
  // elements and trusts the input above that.
  static Matroid explicit_circuits(std::vector<std::string> labels,
                                   std::vector<Mask> circuits);

  const GroundSet& ground() const;
  int size() const { return ground().size(); }  // n+1
  Mask full_set() const { return full_mask(size()); }
  int full_rank() const;  // r+1

  int rank(Mask subset) const;
  bool is_independent(Mask subset) const { return rank(subset) == popcount(subset); }
  bool representable_over_q() const;

  // All minimal dependent sets, lexicographically ordered by their sorted
  // element index sequences. Enumerated lazily, cached, and idempotent under
  // concurrent first use. Ground sets above the enumeration cap raise
  // capacity_error.
  const std::vector<Mask>& circuits() const;

  Mask closure(Mask subset) const;
  Mask loops() const;
  // Parallel classes of non-loop elements, each as a mask, ordered by their
  // smallest member.
  std::vector<Mask> parallel_classes() const;

  // Deletes all loops and all but the first element of every parallel class.
  Matroid simplify() const;
  Matroid dual() const;
  // Adds `p` in general position as the last element.
  Matroid free_extension(const std::string& p) const;
  // (M* + p)*, with p placed first in the ground-set order.
  Matroid free_dual_extension(const std::string& p) const;
  // Adds a new last element parallel to the given one.
  Matroid add_parallel(int element, const std::string& label) const;
  Matroid restrict_to(Mask keep) const;

 private:
  explicit Matroid(std::shared_ptr<const detail::MatroidCore> core);
  std::shared_ptr<const detail::MatroidCore> core_;
};

// Tabulates rank over all 2^n subsets (n at most 20). The fill is a
// data-parallel kernel; see kernels.hpp.
std::vector<std::uint8_t> rank_table(const Matroid& m);

// Exact rank of a matrix with arbitrary-precision integer entries, by
// fraction-free (Bareiss) elimination with row pivoting. Column selection
// happens before the call. Destroys its argument.
int bareiss_rank(std::vector<std::vector<Int>> a);

}  // namespace minv
