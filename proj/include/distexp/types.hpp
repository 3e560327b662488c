#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace distexp {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Thrown when a requested range exceeds the configured sieve or table
/// capacity. The CLI maps this to exit code 2.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

inline u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("u64 multiplication overflow");
  }
  return r;
}

inline u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("u64 addition overflow");
  }
  return r;
}

/// Floor square root, exact for the full u64 range.
inline u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

/// Floor cube root, exact for the full u64 range.
inline u64 icbrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::cbrt(static_cast<double>(n)));
  auto cube_le = [n](u64 v) {
    if (v == 0) return true;
    u128 c = static_cast<u128>(v) * v * v;
    return c <= static_cast<u128>(n);
  };
  while (r > 0 && !cube_le(r)) --r;
  while (cube_le(r + 1)) ++r;
  return r;
}

inline bool is_perfect_square(u64 n, u64* root = nullptr) {
  u64 r = isqrt(n);
  if (root) *root = r;
  return r * r == n;
}

/// Compensated (Kahan) accumulator for long positive series.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

}  // namespace distexp
