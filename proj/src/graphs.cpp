#include "minv/graphs.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "minv/errors.hpp"
#include "minv/flats.hpp"
#include "minv/graph_canon.hpp"
#include "minv/kernels.hpp"

namespace minv {

Matroid cycle_matroid(const Multigraph& g) { return Matroid::graphic(g); }

Matroid cocycle_matroid(const Multigraph& g) { return cycle_matroid(g).dual(); }

namespace {

// Chromatic memo, shared across calls. Values are immutable polynomials of
// canonical connected graphs, so concurrent duplicate inserts agree.
class ChromaticMemo {
 public:
  bool lookup(std::uint64_t key, IntPolynomial& out) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }

  void store(std::uint64_t key, const IntPolynomial& value) {
    std::unique_lock lock(mutex_);
    map_.emplace(key, value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, IntPolynomial> map_;
};

ChromaticMemo& memo() {
  static ChromaticMemo instance;
  return instance;
}

// q (q-1) ... (q-k+1)
IntPolynomial falling_factorial(int k) {
  IntPolynomial p = IntPolynomial::constant(Int(1));
  for (int i = 0; i < k; ++i) p = p.times_q_plus(Int(-i));
  return p;
}

IntPolynomial q_minus_one_power(int k) {
  IntPolynomial p = IntPolynomial::constant(Int(1));
  for (int i = 0; i < k; ++i) p = p.times_q_plus(Int(-1));
  return p;
}

SimpleGraph induced(const SimpleGraph& g, std::uint32_t verts) {
  std::vector<int> pos(g.v, -1);
  int k = 0;
  for (int i = 0; i < g.v; ++i)
    if (has_bit(verts, i)) pos[i] = k++;
  SimpleGraph h(k);
  for (int i = 0; i < g.v; ++i) {
    if (pos[i] < 0) continue;
    for (int j = i + 1; j < g.v; ++j)
      if (pos[j] >= 0 && g.has_edge(i, j)) h.add_edge(pos[i], pos[j]);
  }
  return h;
}

SimpleGraph contract_edge(const SimpleGraph& g, int a, int b) {
  // Merge b into a, then drop b.
  SimpleGraph merged = g;
  for (int j = 0; j < g.v; ++j)
    if (g.has_edge(b, j)) merged.add_edge(a, j);
  merged.remove_edge(a, a);
  std::uint32_t keep = full_mask(g.v) & ~(1u << b);
  return induced(merged, keep);
}

IntPolynomial chrom_any(const SimpleGraph& g);

IntPolynomial chrom_connected(const SimpleGraph& g) {
  const int v = g.v;
  const int e = g.edge_count();
  if (e == 0) return IntPolynomial::monomial(1);  // single vertex
  if (e == v - 1) return q_minus_one_power(e).times_q_plus(Int(0));  // tree: q (q-1)^e
  if (e == v * (v - 1) / 2) return falling_factorial(v);
  std::uint64_t key = canonical_key(g);
  IntPolynomial cached;
  if (memo().lookup(key, cached)) return cached;
  // Deterministic branch edge: the first vertex with an edge has only larger
  // neighbors, so (u, min neighbor) is the lowest edge.
  int u = -1, w = -1;
  for (int i = 0; i < v && u < 0; ++i)
    if (g.adj[i]) {
      u = i;
      w = std::countr_zero(g.adj[i]);
    }
  SimpleGraph del = g;
  del.remove_edge(u, w);
  IntPolynomial result = chrom_any(del) - chrom_any(contract_edge(g, u, w));
  memo().store(key, result);
  return result;
}

IntPolynomial chrom_any(const SimpleGraph& g) {
  // Chromatic polynomials multiply over connected components.
  std::uint32_t unvisited = full_mask(g.v);
  IntPolynomial out = IntPolynomial::constant(Int(1));
  while (unvisited) {
    std::uint32_t comp = unvisited & (0u - unvisited);
    for (;;) {
      std::uint32_t grown = comp;
      for (int i = 0; i < g.v; ++i)
        if (has_bit(comp, i)) grown |= g.adj[i];
      if (grown == comp) break;
      comp = grown;
    }
    out = out * chrom_connected(induced(g, comp));
    unvisited &= ~comp;
  }
  return out;
}

SimpleGraph collapse_to_simple(const Multigraph& g) {
  SimpleGraph s(g.vertices);
  for (const auto& e : g.edges)
    if (e.u != e.w) s.add_edge(e.u, e.w);
  return s;
}

}  // namespace

ChromaticData chromatic_polynomial(const Multigraph& g) {
  ChromaticData out;
  out.components = g.components_all();
  if (g.has_self_loop()) return out;  // zero polynomial
  SimpleGraph s = collapse_to_simple(g);
  if (s.edge_count() > 20) {
    // Dense route: q^c times the characteristic polynomial of the cycle
    // matroid; equals deletion-contraction wherever both run.
    Multigraph simple;
    simple.vertices = g.vertices;
    for (int i = 0; i < s.v; ++i)
      for (int j = i + 1; j < s.v; ++j)
        if (s.has_edge(i, j))
          simple.edges.push_back({i, j, "e" + std::to_string(i) + "-" + std::to_string(j)});
    IntPolynomial chi = char_poly(cycle_matroid(simple));
    for (int c = 0; c < out.components; ++c) chi = chi.times_q_plus(Int(0));
    out.poly = chi;
    return out;
  }
  out.poly = chrom_any(s);
  return out;
}

ReliabilityData reliability_data(const Multigraph& g) {
  if (g.has_self_loop())
    throw std::domain_error("reliability is not defined here for graphs with self-loops");
  if (!g.connected()) throw std::domain_error("reliability requires a connected graph");
  const int e = g.edge_count();
  const int v = g.vertices;
  if (e > kMaxGroundSize)
    throw capacity_error("reliability enumeration capped at " + std::to_string(kMaxGroundSize) +
                         " edges");
  const int d = e - v + 1;  // corank: largest removable cardinality
  auto counts = kernels::connected_removal_count(g);
  ReliabilityData out;
  out.e = e;
  out.v = v;
  out.f.assign(d + 1, Int(0));
  for (int i = 0; i <= d; ++i) out.f[i] = Int(counts[i]);

  // Rel(p) = sum f_i p^(e-i) (1-p)^i, rewritten exactly as
  // p^(v-1) * sum h_i (1-p)^i.
  IntPolynomial one_minus_p = IntPolynomial::linear(Int(1), Int(-1));
  IntPolynomial rel;
  IntPolynomial pow = IntPolynomial::constant(Int(1));
  for (int i = 0; i <= d; ++i) {
    rel += (pow * IntPolynomial::monomial(e - i)).scaled(out.f[i]);
    pow = pow * one_minus_p;
  }
  // Divide by p^(v-1): the low coefficients must vanish.
  IntSeq quot(d + 1, Int(0));
  for (int i = 0; i < v - 1; ++i)
    if (rel.coeff(i) != 0) throw invariant_violation("reliability polynomial not divisible by p^(v-1)");
  for (int i = 0; i <= d; ++i) quot[i] = rel.coeff(v - 1 + i);
  // Expand Q(p) in powers of (1-p): h_i are the coefficients of Q(1-s).
  IntPolynomial q_poly(std::move(quot));
  IntSeq negated = q_poly.coeffs();
  for (size_t i = 1; i < negated.size(); i += 2) negated[i] = -negated[i];
  IntPolynomial composed = IntPolynomial(std::move(negated)).shifted(Int(-1));
  out.h.assign(d + 1, Int(0));
  for (int i = 0; i <= d; ++i) out.h[i] = composed.coeff(i);
  return out;
}

}  // namespace minv
