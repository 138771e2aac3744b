#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "minv/multigraph.hpp"
#include "minv/subsets.hpp"

// Subset-enumeration counting kernels. Each kernel walks all 2^n bitmasks and
// accumulates exact 64-bit counts, so the OpenMP variants produce results
// identical to the serial references regardless of scheduling. The *_serial
// functions are the reference implementations kept for testing and for the
// bench_kernels comparison target; the undecorated names dispatch on problem
// size.
namespace minv::kernels {

bool openmp_enabled();

// Masks per OpenMP task below which the serial path runs.
inline constexpr int kParallelBits = 16;

using RankFn = std::function<int(Mask)>;

// counts[c] = number of cardinality-c subsets containing none of the
// forbidden masks. With an empty forbidden mask present (a loop's broken
// circuit), every subset is excluded.
std::vector<std::uint64_t> nbc_count_serial(int n, std::span<const Mask> forbidden);
std::vector<std::uint64_t> nbc_count_parallel(int n, std::span<const Mask> forbidden);
std::vector<std::uint64_t> nbc_count(int n, std::span<const Mask> forbidden);

// counts[rho][c] = number of cardinality-c subsets of rank rho,
// rho = 0..max_rank. rank_of must be pure and thread-safe.
std::vector<std::vector<std::uint64_t>> rank_card_count_serial(int n, int max_rank,
                                                               const RankFn& rank_of);
std::vector<std::vector<std::uint64_t>> rank_card_count_parallel(int n, int max_rank,
                                                                 const RankFn& rank_of);
std::vector<std::vector<std::uint64_t>> rank_card_count(int n, int max_rank,
                                                        const RankFn& rank_of);

// table[s] = rank_of(s) for all 2^n masks.
std::vector<std::uint8_t> rank_table_serial(int n, const RankFn& rank_of);
std::vector<std::uint8_t> rank_table_parallel(int n, const RankFn& rank_of);
std::vector<std::uint8_t> rank_table(int n, const RankFn& rank_of);

// counts[i] = number of cardinality-i edge sets whose removal leaves the graph
// connected on all vertices.
std::vector<std::uint64_t> connected_removal_count_serial(const Multigraph& g);
std::vector<std::uint64_t> connected_removal_count_parallel(const Multigraph& g);
std::vector<std::uint64_t> connected_removal_count(const Multigraph& g);

}  // namespace minv::kernels
