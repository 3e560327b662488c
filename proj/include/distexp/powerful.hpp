#pragma once

#include <queue>
#include <vector>

#include "distexp/core_arith.hpp"
#include "distexp/types.hpp"

namespace distexp {

/// Streams the powerful numbers <= limit in increasing order, each exactly
/// once, through the unique representation n = a^2 * b^3 with b squarefree.
/// Memory is O(#squarefree b <= cbrt(limit)); nothing up to `limit` is sieved.
class PowerfulStream {
 public:
  explicit PowerfulStream(u64 limit);

  bool done() const { return heap_.empty(); }
  u64 next();
  u64 limit() const { return limit_; }

 private:
  struct Node {
    u64 value;
    u64 a;
    u64 b;
    bool operator>(const Node& o) const { return value > o.value; }
  };

  u64 limit_;
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap_;
};

/// All powerful numbers <= x, increasing.
std::vector<u64> powerful_up_to(u64 x);

u64 count_powerful_up_to(u64 x);

/// Powerful l <= x with g(l) = r, increasing. r = 0 gives the special
/// powerful numbers.
std::vector<u64> special_powerful_up_to(u64 x, int r = 0);

/// Simple Eratosthenes prime list.
std::vector<u32> primes_up_to(u64 limit);

/// Squarefree flags for [0, limit].
std::vector<bool> squarefree_flags_up_to(u64 limit);

}  // namespace distexp
