#include "distexp/parallel.hpp"

#include <atomic>
#include <algorithm>
#include <thread>

namespace distexp {

void SieveConfig::require_capacity(u64 x, const char* what) const {
  if (x > capacity) {
    throw capacity_error(std::string(what) + ": x = " + std::to_string(x) +
                         " exceeds configured capacity " + std::to_string(capacity));
  }
  if (x > 4'000'000'000ull) {
    throw capacity_error(std::string(what) +
                         ": x above 4e9 is not supported by the 32-bit residue buffers");
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<std::pair<u64, u64>> make_blocks(u64 lo, u64 hi, u64 block_size,
                                             const std::vector<u64>& cut_points) {
  std::vector<std::pair<u64, u64>> blocks;
  if (hi < lo) return blocks;
  block_size = std::max<u64>(block_size, 1024);
  std::size_t ci = 0;
  u64 start = lo;
  while (start <= hi) {
    u64 end = start + std::min<u64>(block_size - 1, hi - start);  // inclusive
    while (ci < cut_points.size() && cut_points[ci] < start) ++ci;
    if (ci < cut_points.size() && cut_points[ci] <= end) end = cut_points[ci];
    blocks.emplace_back(start, end + 1);
    start = end + 1;
  }
  return blocks;
}

void parallel_for_blocks(std::size_t n_blocks, unsigned threads,
                         const std::function<void(std::size_t, unsigned)>& fn) {
  threads = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(n_blocks, 1));
  if (threads <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) fn(b, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        while (true) {
          std::size_t b = next.fetch_add(1);
          if (b >= n_blocks || failed.load(std::memory_order_relaxed)) break;
          fn(b, w);
        }
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace distexp
