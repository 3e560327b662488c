#pragma once

#include <functional>
#include <string>
#include <vector>

#include "distexp/types.hpp"

namespace distexp {

/// A point estimate together with an enclosing interval. For rigorous
/// estimates the width covers the proven truncation tail plus a rounding
/// allowance; non-rigorous estimates carry a declared-heuristic tail and
/// rigorous = false.
struct ConstantEstimate {
  std::string name;
  i64 k_or_r = 0;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  u64 cutoff = 0;
  u64 terms_used = 0;
  bool rigorous = true;

  double width() const { return upper - lower; }
  bool contains(double v) const { return lower <= v && v <= upper; }
  bool overlaps(const ConstantEstimate& o) const {
    return lower <= o.upper && o.lower <= upper;
  }
};

inline double six_over_pi_squared() {
  constexpr double pi = 3.14159265358979323846264338327950288;
  return 6.0 / (pi * pi);
}

/// Rigorous upper bound on sum_{l powerful, l > y} 1/l, from the a^2 b^3
/// parametrization: exact finite sums over squarefree b <= cbrt(y) with the
/// integral bound sum_{a > A} 1/a^2 <= 1/A, plus (pi^2/6)/(2 floor(cbrt(y))^2)
/// for all larger b. Monotone nonincreasing in y. Requires y >= 4.
double powerful_tail_bound(u64 y);

/// A_k = (6/pi^2) sum over powerful l with f(l) = k-1 of 1/psi(l), truncated
/// at l <= y. The interval [value, value + (6/pi^2) * powerful_tail_bound(y)]
/// is rigorous since 1/psi(l) <= 1/l; for k = 1 the series is the single
/// term l = 1 and the tail is exactly zero.
ConstantEstimate ak_via_powerful(u32 k, u64 y);

/// All of A_1..A_kmax in one enumeration pass.
std::vector<ConstantEstimate> ak_via_powerful_all(u32 k_max, u64 y);

/// A_k = (6/pi^2) sum over squarefree n of rho_k(n)/psi(n), truncated at
/// n <= cutoff. The tail model rho_k(n) <~ c_k/(n-1) with empirically fitted
/// c_k gives upper = value + (6/pi^2) * c_k / cutoff; this is a declared
/// heuristic, so rigorous = false for k >= 2. For k = 1 the value is exactly
/// 6/pi^2 (the series is supported at n = 1).
ConstantEstimate ak_via_rho(u32 k, u64 cutoff);

std::vector<ConstantEstimate> ak_via_rho_all(u32 k_max, u64 cutoff);

/// B_r = sum over powerful l with g(l) = r of 1/l, truncated at l <= y, with
/// the rigorous tail powerful_tail_bound(y). B = B_0 includes l = 1.
ConstantEstimate b_r(u32 r, u64 y);

std::vector<ConstantEstimate> b_r_all(u32 r_max, u64 y);

/// M_phi = sum_{k >= 1} A_k phi(k) for |phi(k)| < a^k with a > 1, truncated
/// at k <= k_cutoff with A_k taken from ak_via_powerful_all(k_cutoff, y).
/// The interval combines the per-k truncation tails (each capped by the
/// (6/pi^2)/(k-1)! bound) with the series tail sum_{k > K} a^k (6/pi^2)/(k-1)!.
ConstantEstimate m_phi(const std::function<double(u32)>& phi, double a,
                       u32 k_cutoff, u64 y);

/// Apery-accelerated zeta(3), accurate to full double precision.
double zeta3();

/// sum over all powerful l of 1/l = zeta(2) zeta(3) / zeta(6), evaluated
/// from pi and the zeta3() series; the independent oracle for the B_r
/// partition checks.
double powerful_reciprocal_sum();

/// Exact partial sum of 1/l over powerful l <= y (compensated summation).
double powerful_reciprocal_partial_sum(u64 y);

}  // namespace distexp
