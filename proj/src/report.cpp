#include "minv/report.hpp"

#include "minv/flats.hpp"

namespace minv {

namespace {

bool h_ok(const Verdict& v) { return v.log_concave && v.nonnegative && !v.internal_zeros; }
bool f_ok(const Verdict& v) {
  return v.strictly_log_concave && v.nonnegative && !v.internal_zeros;
}

bool all_zero(const IntSeq& s) {
  for (const Int& x : s)
    if (x != 0) return false;
  return true;
}

// Merge so that any failing ordering leaves its mark.
void merge_worst(Verdict& into, const Verdict& v) {
  into.log_concave &= v.log_concave;
  into.strictly_log_concave &= v.strictly_log_concave;
  into.internal_zeros |= v.internal_zeros;
  into.nonnegative &= v.nonnegative;
  into.sign_alternating &= v.sign_alternating;
  if (!into.first_violation && v.first_violation) into.first_violation = v.first_violation;
}

}  // namespace

TheoremReport theorem_report(const Matroid& m, const std::vector<Ordering>& orderings,
                             std::string name, std::string note) {
  TheoremReport rep;
  rep.name = std::move(name);
  rep.note = std::move(note);
  rep.representable = m.representable_over_q();
  rep.label = rep.representable ? "theorem check" : "conjecture check (not Q-representable)";
  rep.n = m.size();
  rep.rank = m.full_rank();
  rep.has_loops = m.loops() != 0;

  const int r = rep.rank - 1;
  rep.f_in = in_f_vector(m);
  rep.h_in = f_to_h(rep.f_in, r);
  rep.v_f_in = analyze_sequence(rep.f_in);
  rep.v_h_in = analyze_sequence(rep.h_in);

  std::vector<Ordering> ords = orderings;
  if (ords.empty()) ords.push_back(identity_ordering(m.size()));
  for (const Ordering& ord : ords) {
    IntSeq f = bc_f_vector(m, ord);
    IntSeq h = f_to_h(f, r);
    merge_worst(rep.v_f_bc, analyze_sequence(f));
    merge_worst(rep.v_h_bc, analyze_sequence(h));
    if (!rep.f_bc.empty() && (f != rep.f_bc.front() || h != rep.h_bc.front()))
      rep.bc_ordering_invariant = false;
    rep.f_bc.push_back(std::move(f));
    rep.h_bc.push_back(std::move(h));
  }

  rep.whitney_abs = whitney_numbers(m).w;

  // Empty complexes (loop matroids) carry all-zero f-vectors; strictness is
  // vacuous there.
  bool f_bc_ok = all_zero(rep.f_bc.front()) || f_ok(rep.v_f_bc);
  rep.pass = h_ok(rep.v_h_in) && h_ok(rep.v_h_bc) && f_ok(rep.v_f_in) && f_bc_ok &&
             rep.bc_ordering_invariant;
  return rep;
}

}  // namespace minv
