#include "minv/kernels.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "minv/errors.hpp"

namespace minv::kernels {

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace {

void check_bits(int n) {
  if (n < 0 || n > kMaxGroundSize)
    throw capacity_error("subset enumeration capped at " + std::to_string(kMaxGroundSize) +
                         " elements");
}

inline bool avoids_all(Mask m, std::span<const Mask> forbidden) {
  for (Mask f : forbidden)
    if ((m & f) == f) return false;
  return true;
}

}  // namespace

std::vector<std::uint64_t> nbc_count_serial(int n, std::span<const Mask> forbidden) {
  check_bits(n);
  std::vector<std::uint64_t> counts(n + 1, 0);
  const std::int64_t total = std::int64_t(1) << n;
  for (std::int64_t m = 0; m < total; ++m)
    if (avoids_all(Mask(m), forbidden)) ++counts[popcount(Mask(m))];
  return counts;
}

std::vector<std::uint64_t> nbc_count_parallel(int n, std::span<const Mask> forbidden) {
  check_bits(n);
  std::vector<std::uint64_t> counts(n + 1, 0);
  const std::int64_t total = std::int64_t(1) << n;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 0; m < total; ++m)
      if (avoids_all(Mask(m), forbidden)) ++local[popcount(Mask(m))];
#pragma omp critical
    for (int c = 0; c <= n; ++c) counts[c] += local[c];
  }
  return counts;
}

std::vector<std::uint64_t> nbc_count(int n, std::span<const Mask> forbidden) {
  if (openmp_enabled() && n >= kParallelBits) return nbc_count_parallel(n, forbidden);
  return nbc_count_serial(n, forbidden);
}

std::vector<std::vector<std::uint64_t>> rank_card_count_serial(int n, int max_rank,
                                                               const RankFn& rank_of) {
  check_bits(n);
  std::vector<std::vector<std::uint64_t>> counts(max_rank + 1,
                                                 std::vector<std::uint64_t>(n + 1, 0));
  const std::int64_t total = std::int64_t(1) << n;
  for (std::int64_t m = 0; m < total; ++m) ++counts[rank_of(Mask(m))][popcount(Mask(m))];
  return counts;
}

std::vector<std::vector<std::uint64_t>> rank_card_count_parallel(int n, int max_rank,
                                                                 const RankFn& rank_of) {
  check_bits(n);
  std::vector<std::vector<std::uint64_t>> counts(max_rank + 1,
                                                 std::vector<std::uint64_t>(n + 1, 0));
  const std::int64_t total = std::int64_t(1) << n;
#pragma omp parallel
  {
    std::vector<std::vector<std::uint64_t>> local(max_rank + 1,
                                                  std::vector<std::uint64_t>(n + 1, 0));
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 0; m < total; ++m) ++local[rank_of(Mask(m))][popcount(Mask(m))];
#pragma omp critical
    for (int r = 0; r <= max_rank; ++r)
      for (int c = 0; c <= n; ++c) counts[r][c] += local[r][c];
  }
  return counts;
}

std::vector<std::vector<std::uint64_t>> rank_card_count(int n, int max_rank,
                                                        const RankFn& rank_of) {
  if (openmp_enabled() && n >= kParallelBits) return rank_card_count_parallel(n, max_rank, rank_of);
  return rank_card_count_serial(n, max_rank, rank_of);
}

std::vector<std::uint8_t> rank_table_serial(int n, const RankFn& rank_of) {
  check_bits(n);
  std::vector<std::uint8_t> table(std::size_t(1) << n);
  const std::int64_t total = std::int64_t(1) << n;
  for (std::int64_t m = 0; m < total; ++m) table[m] = std::uint8_t(rank_of(Mask(m)));
  return table;
}

std::vector<std::uint8_t> rank_table_parallel(int n, const RankFn& rank_of) {
  check_bits(n);
  std::vector<std::uint8_t> table(std::size_t(1) << n);
  const std::int64_t total = std::int64_t(1) << n;
#pragma omp parallel for schedule(static)
  for (std::int64_t m = 0; m < total; ++m) table[m] = std::uint8_t(rank_of(Mask(m)));
  return table;
}

std::vector<std::uint8_t> rank_table(int n, const RankFn& rank_of) {
  if (openmp_enabled() && n >= kParallelBits) return rank_table_parallel(n, rank_of);
  return rank_table_serial(n, rank_of);
}

namespace {

// Connectivity of the kept-edge subgraph over all `v` vertices, with a small
// inline union-find. Thread-local scratch keeps the inner loop allocation-free.
struct ConnCheck {
  int v;
  std::vector<int> us, ws;

  explicit ConnCheck(const Multigraph& g) : v(g.vertices) {
    for (const auto& e : g.edges) {
      us.push_back(e.u);
      ws.push_back(e.w);
    }
  }

  bool connected_when_removed(Mask removed) const {
    int parent[32];
    for (int i = 0; i < v; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    int comps = v;
    for (size_t i = 0; i < us.size(); ++i) {
      if (has_bit(removed, int(i))) continue;
      int a = find(us[i]), b = find(ws[i]);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    return comps == 1;
  }
};

}  // namespace

std::vector<std::uint64_t> connected_removal_count_serial(const Multigraph& g) {
  const int e = g.edge_count();
  check_bits(e);
  if (g.vertices > 32) throw capacity_error("removal counting capped at 32 vertices");
  ConnCheck chk(g);
  std::vector<std::uint64_t> counts(e + 1, 0);
  const std::int64_t total = std::int64_t(1) << e;
  for (std::int64_t m = 0; m < total; ++m)
    if (chk.connected_when_removed(Mask(m))) ++counts[popcount(Mask(m))];
  return counts;
}

std::vector<std::uint64_t> connected_removal_count_parallel(const Multigraph& g) {
  const int e = g.edge_count();
  check_bits(e);
  if (g.vertices > 32) throw capacity_error("removal counting capped at 32 vertices");
  ConnCheck chk(g);
  std::vector<std::uint64_t> counts(e + 1, 0);
  const std::int64_t total = std::int64_t(1) << e;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(e + 1, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 0; m < total; ++m)
      if (chk.connected_when_removed(Mask(m))) ++local[popcount(Mask(m))];
#pragma omp critical
    for (int c = 0; c <= e; ++c) counts[c] += local[c];
  }
  return counts;
}

std::vector<std::uint64_t> connected_removal_count(const Multigraph& g) {
  if (openmp_enabled() && g.edge_count() >= kParallelBits)
    return connected_removal_count_parallel(g);
  return connected_removal_count_serial(g);
}

}  // namespace minv::kernels
