#pragma once

#include <vector>

#include "distexp/types.hpp"

namespace distexp {

struct PrimePower {
  u64 prime = 0;
  u32 exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Full prime factorization of a positive integer. For n = 1 the factor
/// list is empty. Primes are strictly increasing, exponents >= 1.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Smallest-prime-factor table over [2, limit]. Immutable once built and
/// safe to share across threads. Costs 4 bytes per entry.
class SpfTable {
 public:
  static constexpr u64 kDefaultLimitCeiling = 1ull << 28;  // ~1 GiB of table

  explicit SpfTable(u64 limit, u64 limit_ceiling = kDefaultLimitCeiling);

  u64 limit() const { return limit_; }
  u32 spf(u64 m) const { return spf_[m]; }
  bool is_prime(u64 m) const { return m >= 2 && spf_[m] == m; }

 private:
  u64 limit_;
  std::vector<u32> spf_;
};

SpfTable build_spf(u64 limit, u64 limit_ceiling = SpfTable::kDefaultLimitCeiling);

/// Factorize 1 <= n <= table.limit() by repeated smallest-prime-factor lookup.
Factorization factorize(u64 n, const SpfTable& table);

/// Factorize an isolated 64-bit n: trial division up to cbrt(n), then the
/// residual cofactor is 1, a prime, a prime square, or a product of two
/// distinct primes (split by Pollard rho).
Factorization factorize(u64 n);

/// Deterministic Miller-Rabin for the full u64 range.
bool is_prime(u64 n);

/// Number of distinct exponents among the prime factorization; 0 for n = 1.
int f_distinct_exponents(const Factorization& fact);

/// Number of distinct prime factors.
int omega(const Factorization& fact);

/// omega(n) - f(n); always >= 0.
int g_deficiency(const Factorization& fact);

/// Every exponent >= 2 (vacuously true for n = 1).
bool is_powerful(const Factorization& fact);

/// Every exponent == 1 (vacuously true for n = 1).
bool is_squarefree(const Factorization& fact);

/// All exponents pairwise distinct, i.e. g(n) = 0. n = 1 is special.
bool is_special(const Factorization& fact);

/// Dedekind psi(n) = n * prod_{p | n} (1 + 1/p), evaluated exactly as
/// prod p^(e-1) * (p + 1) with 128-bit intermediates. Throws
/// std::overflow_error when the value does not fit in 64 bits.
u64 dedekind_psi(const Factorization& fact);

struct SquarefreePowerfulSplit {
  u64 squarefree = 1;  // product of primes with exponent 1
  u64 powerful = 1;    // product of prime powers with exponent >= 2

  friend bool operator==(const SquarefreePowerfulSplit&,
                         const SquarefreePowerfulSplit&) = default;
};

/// Unique decomposition n = m * l with m squarefree, l powerful, gcd = 1.
SquarefreePowerfulSplit powerful_part(const Factorization& fact);

}  // namespace distexp
