#include "distexp/powerful.hpp"

namespace distexp {

std::vector<u32> primes_up_to(u64 limit) {
  std::vector<u32> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(static_cast<u32>(p));
    for (u64 m = p * p; m <= limit; m += p) composite[m] = true;
  }
  return primes;
}

std::vector<bool> squarefree_flags_up_to(u64 limit) {
  std::vector<bool> flags(limit + 1, true);
  flags[0] = false;
  for (u64 p = 2; p * p <= limit; ++p) {
    u64 pp = p * p;
    for (u64 m = pp; m <= limit; m += pp) flags[m] = false;
  }
  return flags;
}

PowerfulStream::PowerfulStream(u64 limit) : limit_(limit) {
  if (limit == 0) throw std::invalid_argument("PowerfulStream: limit must be >= 1");
  u64 bmax = icbrt(limit);
  auto squarefree = squarefree_flags_up_to(bmax);
  for (u64 b = 1; b <= bmax; ++b) {
    if (!squarefree[b]) continue;
    u64 cube = b * b * b;  // <= limit <= 2^64-1 by icbrt
    heap_.push({cube, 1, b});
  }
}

u64 PowerfulStream::next() {
  Node top = heap_.top();
  heap_.pop();
  u64 a = top.a + 1;
  u128 value = static_cast<u128>(a) * a * top.b * top.b * top.b;
  if (value <= limit_) {
    heap_.push({static_cast<u64>(value), a, top.b});
  }
  return top.value;
}

std::vector<u64> powerful_up_to(u64 x) {
  std::vector<u64> out;
  PowerfulStream stream(x);
  while (!stream.done()) out.push_back(stream.next());
  return out;
}

u64 count_powerful_up_to(u64 x) {
  u64 count = 0;
  PowerfulStream stream(x);
  while (!stream.done()) {
    stream.next();
    ++count;
  }
  return count;
}

std::vector<u64> special_powerful_up_to(u64 x, int r) {
  std::vector<u64> out;
  PowerfulStream stream(x);
  while (!stream.done()) {
    u64 l = stream.next();
    if (g_deficiency(factorize(l)) == r) out.push_back(l);
  }
  return out;
}

}  // namespace distexp
