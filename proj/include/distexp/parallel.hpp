#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "distexp/types.hpp"

namespace distexp {

/// Shared knobs for segmented sieves. Results are bit-identical for any
/// thread count: per-block tallies are merged in block-index order.
struct SieveConfig {
  unsigned threads = 0;           // 0 = hardware concurrency
  u64 block_size = 1ull << 22;
  u64 capacity = 1'000'000'000ull;  // largest admissible x

  void require_capacity(u64 x, const char* what) const;
};

unsigned resolve_threads(unsigned requested);

/// Half-open blocks covering [lo, hi], at most block_size wide, additionally
/// cut at each value in cut_points so every block lies inside one
/// checkpoint interval. cut_points must be increasing and within [lo, hi].
std::vector<std::pair<u64, u64>> make_blocks(u64 lo, u64 hi, u64 block_size,
                                             const std::vector<u64>& cut_points = {});

/// Runs fn(block_index, worker_index) over all block indices on a small
/// thread pool. Blocks are claimed through an atomic counter; callers keep
/// determinism by writing into per-block slots and reducing in index order.
void parallel_for_blocks(std::size_t n_blocks, unsigned threads,
                         const std::function<void(std::size_t, unsigned)>& fn);

}  // namespace distexp
