#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "distexp/constants.hpp"
#include "distexp/parallel.hpp"
#include "distexp/types.hpp"

namespace distexp {

enum class DistributionKind { FDistribution, GDistribution };

/// Exact histogram k -> #{n <= x with f(n) = k} (or g(n) = k). The buckets
/// partition [1, x]: total() == x, with n = 1 landing in bucket 0.
struct DistributionTable {
  u64 x = 0;
  DistributionKind kind = DistributionKind::FDistribution;
  std::vector<u64> counts;

  u64 total() const;
  u64 count(u32 k) const { return k < counts.size() ? counts[k] : 0; }
};

struct FgHistograms {
  DistributionTable f;
  DistributionTable g;
};

/// One segmented full-factorization sweep over [1, x], tallying f and g
/// together. Block-parallel; per-block tallies are merged in index order so
/// results are identical for every thread count.
FgHistograms count_fg_distributions(u64 x, const SieveConfig& cfg = {});

/// Histograms at each checkpoint of an increasing grid from a single sweep.
std::vector<FgHistograms> count_fg_distributions_grid(const std::vector<u64>& x_grid,
                                                      const SieveConfig& cfg = {});

DistributionTable count_f_distribution(u64 x, const SieveConfig& cfg = {});
DistributionTable count_g_distribution(u64 x, const SieveConfig& cfg = {});

/// Streams every n <= x with g(n) = r to the sink, in increasing order.
/// Single-threaded segmented scan; memory stays at one block.
void for_each_with_deficiency(u64 x, u32 r, const std::function<void(u64)>& sink,
                              const SieveConfig& cfg = {});

/// Materialized convenience wrapper (r = 0 lists the special numbers).
std::vector<u64> numbers_with_deficiency_up_to(u64 x, u32 r,
                                               const SieveConfig& cfg = {});

/// sum_{n <= x} phi(f(n)) evaluated through the f-histogram, with the
/// convention phi(0) := 0 (the n = 1 bucket is dropped).
double moment_sum(u64 x, const std::function<double(u32)>& phi,
                  const SieveConfig& cfg = {});
double moment_sum(const DistributionTable& f_table,
                  const std::function<double(u32)>& phi);

struct ComparisonRow {
  u64 x = 0;
  u64 count = 0;
  double prediction = 0.0;
  double error = 0.0;   // count - prediction
  double ratio = 0.0;   // count / prediction
  double scaled_dev = 0.0;  // |ratio - 1| * log log x (g-distribution reports)
};

struct ComparisonReport {
  DistributionKind kind = DistributionKind::FDistribution;
  u32 k = 0;
  ConstantEstimate constant;  // the A_k or B estimate behind the predictions
  std::vector<ComparisonRow> rows;
  /// Least-squares slope of log|error| against log x; absent with fewer
  /// than four usable points.
  std::optional<double> error_exponent;
  double exponent_threshold = 0.6;
  bool exponent_consistent = false;  // error_exponent <= threshold
};

struct FdistCompareOptions {
  u64 ak_cutoff = 10'000'000'000ull;  // powerful-series cutoff for A_k
  double beta_threshold = 0.6;
  SieveConfig sieve;
};

struct GdistCompareOptions {
  u64 b_cutoff = 1'000'000'000ull;  // powerful-series cutoff for B
  SieveConfig sieve;
};

/// N_k(x) against A_k * x over an increasing grid.
ComparisonReport compare_fdist(const std::vector<u64>& x_grid, u32 k,
                               const FdistCompareOptions& opt = {});
/// Same, reusing precomputed grid histograms and a precomputed A_k.
ComparisonReport compare_fdist(const std::vector<u64>& x_grid, u32 k,
                               const std::vector<FgHistograms>& grid_hists,
                               const ConstantEstimate& ak,
                               double beta_threshold = 0.6);

/// M_k(x) against B x (log log x)^k / (k! log x) over a grid of x >= 3.
ComparisonReport compare_gdist(const std::vector<u64>& x_grid, u32 k,
                               const GdistCompareOptions& opt = {});
ComparisonReport compare_gdist(const std::vector<u64>& x_grid, u32 k,
                               const std::vector<FgHistograms>& grid_hists,
                               const ConstantEstimate& b);

}  // namespace distexp
