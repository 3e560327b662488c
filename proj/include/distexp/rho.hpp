#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "distexp/core_arith.hpp"
#include "distexp/types.hpp"

namespace distexp {

using Rational = boost::multiprecision::cpp_rational;

/// Memoized exact-rational values of the recursive family
///   rho_1(1) = 1, rho_1(n) = 0 for n > 1,
///   rho_{k+1}(1) = 0, rho_{k+1}(n) = (1/(n-1)) * sum_{d | n, d < n} rho_k(d),
/// defined on squarefree n. Values are nonnegative and rho_k(n) = 0 whenever
/// omega(n) < k - 1.
class RhoTable {
 public:
  using Key = std::pair<u32, u64>;  // (k, n)

  explicit RhoTable(u64 n_capacity = 100'000);

  /// Exact rho_k(n). Throws std::invalid_argument for k = 0, non-squarefree
  /// n, or n beyond the table's divisor-enumeration capacity.
  const Rational& rho(u32 k, u64 n);

  /// Fills every (k, n) with k <= k_max and squarefree n <= n_max, walking n
  /// in increasing order so each divisor sum only touches memoized entries.
  void build_up_to(u32 k_max, u64 n_max);

  const std::map<Key, Rational>& entries() const { return memo_; }
  u64 capacity() const { return spf_.limit(); }

 private:
  std::vector<u64> proper_divisors(u64 n);

  SpfTable spf_;
  std::map<Key, Rational> memo_;
};

/// Partial sums sum_{n <= cutoff squarefree} rho_k(n) / psi(n) for
/// k = 1..k_max, plus the empirical scale c_k = max_n rho_k(n) * (n - 1)
/// observed over the sweep (the declared-heuristic tail model rho_k(n)
/// <~ c_k / (n - 1) feeding the non-rigorous interval of the rho route).
///
/// The sweep runs a bottom-up DP in double precision; every term is
/// nonnegative so no cancellation occurs and the result matches the
/// exact-rational recursion to ~1e-14 relative (asserted in the tests on
/// overlap ranges).
struct RhoSeriesSums {
  u64 cutoff = 0;
  std::vector<double> partial_sum;      // index k, [0] unused
  std::vector<double> empirical_scale;  // c_k
  std::vector<u64> terms_used;          // squarefree n with rho_k(n) != 0
};

RhoSeriesSums rho_series_partial_sums(u32 k_max, u64 cutoff);

}  // namespace distexp
