#pragma once

#include <vector>

#include "distexp/parallel.hpp"
#include "distexp/types.hpp"

namespace distexp {

/// Exact counts of squarefree n <= x with gcd(n, h) = 1, bucketed by
/// omega(n). Index 0 holds the single n = 1 term.
struct SquarefreeProfile {
  u64 x = 0;
  u64 h = 1;
  std::vector<u64> count_by_omega;

  u64 total() const;            // Q(x; h)
  u64 with_omega(u32 s) const;  // Q_s(x; h)
};

/// One segmented sweep over [1, x]; parallel over blocks with deterministic
/// merge. Counts are exact (squared-prime striking for squarefree flags,
/// accumulated prime products to detect the one possible factor > sqrt(x)).
SquarefreeProfile squarefree_coprime_profile(u64 x, u64 h, const SieveConfig& cfg = {});

/// Profiles at every checkpoint of an increasing grid, in one sweep up to
/// the largest x.
std::vector<SquarefreeProfile> squarefree_coprime_profile_grid(
    const std::vector<u64>& x_grid, u64 h, const SieveConfig& cfg = {});

/// Q(x; h): squarefree n <= x coprime to h. Real x is floored; x < 1 gives 0.
u64 count_squarefree_coprime(double x, u64 h, const SieveConfig& cfg = {});

/// Q_s(x; h): additionally omega(n) = s (s >= 1).
u64 count_squarefree_coprime_omega(double x, u64 h, u32 s, const SieveConfig& cfg = {});

/// Independent Moebius inclusion-exclusion route:
///   Q(x; h) = sum_{d <= sqrt(x), gcd(d, h) = 1} mu(d) * #{m <= x/d^2 : gcd(m, h) = 1}.
/// Used as a cross-check of the sieve path and for x beyond sieve capacity.
u64 count_squarefree_coprime_mobius(u64 x, u64 h);

}  // namespace distexp
