#pragma once

#include <optional>
#include <vector>

#include "distexp/parallel.hpp"
#include "distexp/types.hpp"

namespace distexp {

/// Truncated evaluation of the nested geometric identity
///   sum_{a0 < a1 < ... < ak} 1/(x1^a1 ... xk^ak)
///     = (x1 ... xk)^(-a0) * prod_j 1/(x_j ... x_k - 1),
/// with a computable geometric bound on the truncation tail. Passes when
/// |lhs - rhs| <= tail_bound + 1e-12.
struct NestedGeometricReport {
  i64 a0 = 0;
  std::vector<double> xs;
  u64 truncation = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double difference = 0.0;
  double tail_bound = 0.0;
  bool pass = false;
};

/// Requires every x_j > 1 + 1e-6. The truncation depth is chosen
/// adaptively so the tail bound drops below 1e-12.
NestedGeometricReport nested_geometric_check(i64 a0, const std::vector<double>& xs,
                                             std::optional<u64> truncation = {});

struct SquarefreeLemmaRow {
  u64 x = 0;
  u64 h = 1;
  u64 q = 0;               // exact Q(x; h)
  double main_term = 0.0;  // (6/pi^2) (h/psi(h)) x
  double normalized_error = 0.0;  // |q - main| / (4^omega(h) (sqrt(x)+1))
};

struct SquarefreeLemmaReport {
  std::vector<SquarefreeLemmaRow> rows;
  double fitted_constant = 0.0;  // max normalized error across the grid
  double threshold = 2.0;
  bool pass = false;
};

/// Exercises Q(x; h) = (6/pi^2)(h/psi(h)) x + O(4^omega(h) (sqrt(x)+1))
/// over a grid; passes when the fitted constant stays <= threshold.
SquarefreeLemmaReport lemma_squarefree_check(const std::vector<u64>& x_grid,
                                             const std::vector<u64>& h_set,
                                             double threshold = 2.0,
                                             const SieveConfig& cfg = {});

struct LandauRow {
  u64 x = 0;
  u64 h = 1;
  u32 s = 1;
  u64 q_s = 0;
  double main_term = 0.0;  // x (log log x)^(s-1) / ((s-1)! log x)
  double ratio = 0.0;
  double scaled_dev = 0.0;  // |ratio - 1| * log log x / log log(h + 2)
};

struct LandauReport {
  std::vector<LandauRow> rows;
  double fitted_constant = 0.0;  // max scaled deviation
  /// For each (h, s): |ratio - 1| at the last grid point is below its value
  /// two grid points earlier (the asymptotic pull becomes visible over the
  /// top decades even where the ratio first overshoots 1).
  bool trend_ok = false;
  bool pass = false;
};

/// Requires x >= 3 and h <= x^delta for every pair; delta in (0, 1).
LandauReport landau_check(const std::vector<u64>& x_grid,
                          const std::vector<u64>& h_set, u32 s_max, double delta,
                          const SieveConfig& cfg = {});

}  // namespace distexp
