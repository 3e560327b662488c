#include "distexp/empirical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "distexp/powerful.hpp"

namespace distexp {

namespace {

constexpr std::size_t kBuckets = 64;

struct BlockScratch {
  std::vector<u32> rem;
  std::vector<u32> mask;
  std::vector<u8> omega;
};

struct BlockTally {
  std::vector<u64> f;
  std::vector<u64> g;
};

// Full factorization shape of every n in [lo, hi]: strike each prime
// p <= sqrt(x_max), divide out its exact exponent, and record the exponent
// in a bitmask. Whatever remains after all strikes is 1 or a single prime
// > sqrt(x_max) carrying exponent 1. Calls fn(n, f, g) in increasing n.
template <class Fn>
void scan_block(u64 lo, u64 hi_inclusive, const std::vector<u32>& primes,
                BlockScratch& scratch, Fn&& fn) {
  const std::size_t len = static_cast<std::size_t>(hi_inclusive - lo + 1);
  scratch.rem.resize(len);
  scratch.mask.assign(len, 0);
  scratch.omega.assign(len, 0);
  for (std::size_t i = 0; i < len; ++i) scratch.rem[i] = static_cast<u32>(lo + i);

  for (u32 p : primes) {
    u64 first = ((lo + p - 1) / p) * p;
    for (u64 m = first; m <= hi_inclusive; m += p) {
      std::size_t i = static_cast<std::size_t>(m - lo);
      u32 r = scratch.rem[i];
      u32 e = 0;
      do {
        r /= p;
        ++e;
      } while (r % p == 0);
      scratch.rem[i] = r;
      scratch.mask[i] |= 1u << std::min<u32>(e, 31);
      ++scratch.omega[i];
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    u32 mask = scratch.mask[i];
    u32 om = scratch.omega[i];
    if (scratch.rem[i] > 1) {  // leftover prime above sqrt(x_max)
      mask |= 2u;
      ++om;
    }
    u32 f = static_cast<u32>(std::popcount(mask));
    fn(lo + i, f, om - f);
  }
}

void fg_block(u64 lo, u64 hi_inclusive, const std::vector<u32>& primes,
              BlockScratch& scratch, BlockTally& tally) {
  scan_block(lo, hi_inclusive, primes, scratch, [&](u64, u32 f, u32 g) {
    tally.f[f] += 1;
    tally.g[g] += 1;
  });
}

std::vector<u64> trimmed(const std::vector<u64>& counts) {
  std::vector<u64> out = counts;
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::optional<double> fit_error_exponent(const std::vector<ComparisonRow>& rows) {
  // Least squares of log|error| on log x; needs at least four points with
  // nonzero error.
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : rows) {
    if (std::abs(row.error) > 0.0) {
      pts.emplace_back(std::log(static_cast<double>(row.x)), std::log(std::abs(row.error)));
    }
  }
  if (pts.size() < 4) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [px, py] : pts) {
    sx += px;
    sy += py;
    sxx += px * px;
    sxy += px * py;
  }
  double n = static_cast<double>(pts.size());
  double denom = n * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (n * sxy - sx * sy) / denom;
}

double log_log(u64 x) { return std::log(std::log(static_cast<double>(x))); }

}  // namespace

u64 DistributionTable::total() const {
  u64 t = 0;
  for (u64 c : counts) t += c;
  return t;
}

std::vector<FgHistograms> count_fg_distributions_grid(const std::vector<u64>& x_grid,
                                                      const SieveConfig& cfg) {
  if (x_grid.empty()) return {};
  if (!std::is_sorted(x_grid.begin(), x_grid.end()) || x_grid.front() == 0) {
    throw std::invalid_argument("histogram grid must be increasing and positive");
  }
  u64 x_max = x_grid.back();
  cfg.require_capacity(x_max, "count_fg_distributions");

  auto primes = primes_up_to(isqrt(x_max));
  auto blocks = make_blocks(1, x_max, cfg.block_size, x_grid);

  unsigned workers = resolve_threads(cfg.threads);
  std::vector<BlockScratch> scratch(workers);
  std::vector<BlockTally> tallies(blocks.size());

  parallel_for_blocks(blocks.size(), cfg.threads, [&](std::size_t b, unsigned w) {
    tallies[b].f.assign(kBuckets, 0);
    tallies[b].g.assign(kBuckets, 0);
    fg_block(blocks[b].first, blocks[b].second - 1, primes, scratch[w], tallies[b]);
  });

  std::vector<FgHistograms> out;
  out.reserve(x_grid.size());
  std::vector<u64> running_f(kBuckets, 0), running_g(kBuckets, 0);
  std::size_t gi = 0;
  for (std::size_t b = 0; b < blocks.size() && gi < x_grid.size(); ++b) {
    for (std::size_t i = 0; i < kBuckets; ++i) {
      running_f[i] += tallies[b].f[i];
      running_g[i] += tallies[b].g[i];
    }
    while (gi < x_grid.size() && blocks[b].second - 1 == x_grid[gi]) {
      FgHistograms h;
      h.f = {x_grid[gi], DistributionKind::FDistribution, trimmed(running_f)};
      h.g = {x_grid[gi], DistributionKind::GDistribution, trimmed(running_g)};
      out.push_back(std::move(h));
      ++gi;
    }
  }
  return out;
}

FgHistograms count_fg_distributions(u64 x, const SieveConfig& cfg) {
  return count_fg_distributions_grid({x}, cfg).front();
}

DistributionTable count_f_distribution(u64 x, const SieveConfig& cfg) {
  return count_fg_distributions(x, cfg).f;
}

DistributionTable count_g_distribution(u64 x, const SieveConfig& cfg) {
  return count_fg_distributions(x, cfg).g;
}

void for_each_with_deficiency(u64 x, u32 r, const std::function<void(u64)>& sink,
                              const SieveConfig& cfg) {
  if (x == 0) throw std::invalid_argument("deficiency scan requires x >= 1");
  cfg.require_capacity(x, "for_each_with_deficiency");
  auto primes = primes_up_to(isqrt(x));
  auto blocks = make_blocks(1, x, cfg.block_size);
  BlockScratch scratch;
  for (const auto& [lo, hi] : blocks) {
    scan_block(lo, hi - 1, primes, scratch, [&](u64 n, u32, u32 g) {
      if (g == r) sink(n);
    });
  }
}

std::vector<u64> numbers_with_deficiency_up_to(u64 x, u32 r, const SieveConfig& cfg) {
  std::vector<u64> out;
  for_each_with_deficiency(x, r, [&](u64 n) { out.push_back(n); }, cfg);
  return out;
}

double moment_sum(const DistributionTable& f_table,
                  const std::function<double(u32)>& phi) {
  KahanSum sum;
  for (u32 k = 1; k < f_table.counts.size(); ++k) {
    if (f_table.counts[k] == 0) continue;
    sum.add(static_cast<double>(f_table.counts[k]) * phi(k));
  }
  return sum.value();
}

double moment_sum(u64 x, const std::function<double(u32)>& phi,
                  const SieveConfig& cfg) {
  return moment_sum(count_f_distribution(x, cfg), phi);
}

ComparisonReport compare_fdist(const std::vector<u64>& x_grid, u32 k,
                               const std::vector<FgHistograms>& grid_hists,
                               const ConstantEstimate& ak, double beta_threshold) {
  if (k == 0) throw std::invalid_argument("compare_fdist: k must be >= 1");
  ComparisonReport report;
  report.kind = DistributionKind::FDistribution;
  report.k = k;
  report.constant = ak;
  report.exponent_threshold = beta_threshold;
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    ComparisonRow row;
    row.x = x_grid[i];
    row.count = grid_hists[i].f.count(k);
    row.prediction = ak.value * static_cast<double>(row.x);
    row.error = static_cast<double>(row.count) - row.prediction;
    row.ratio = row.prediction != 0.0
                    ? static_cast<double>(row.count) / row.prediction
                    : 0.0;
    report.rows.push_back(row);
  }
  report.error_exponent = fit_error_exponent(report.rows);
  report.exponent_consistent =
      report.error_exponent.has_value() && *report.error_exponent <= beta_threshold;
  return report;
}

ComparisonReport compare_fdist(const std::vector<u64>& x_grid, u32 k,
                               const FdistCompareOptions& opt) {
  auto hists = count_fg_distributions_grid(x_grid, opt.sieve);
  auto ak = ak_via_powerful(k, opt.ak_cutoff);
  return compare_fdist(x_grid, k, hists, ak, opt.beta_threshold);
}

ComparisonReport compare_gdist(const std::vector<u64>& x_grid, u32 k,
                               const std::vector<FgHistograms>& grid_hists,
                               const ConstantEstimate& b) {
  ComparisonReport report;
  report.kind = DistributionKind::GDistribution;
  report.k = k;
  report.constant = b;
  double k_factorial = 1.0;
  for (u32 i = 2; i <= k; ++i) k_factorial *= i;
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    u64 x = x_grid[i];
    if (x < 3) throw std::invalid_argument("compare_gdist: grid values must be >= 3");
    ComparisonRow row;
    row.x = x;
    row.count = grid_hists[i].g.count(k);
    double xd = static_cast<double>(x);
    row.prediction = b.value * xd * std::pow(log_log(x), static_cast<double>(k)) /
                     (k_factorial * std::log(xd));
    row.error = static_cast<double>(row.count) - row.prediction;
    row.ratio = static_cast<double>(row.count) / row.prediction;
    row.scaled_dev = std::abs(row.ratio - 1.0) * log_log(x);
    report.rows.push_back(row);
  }
  report.error_exponent = std::nullopt;
  report.exponent_consistent = true;  // no exponent claim for the g-report
  return report;
}

ComparisonReport compare_gdist(const std::vector<u64>& x_grid, u32 k,
                               const GdistCompareOptions& opt) {
  auto hists = count_fg_distributions_grid(x_grid, opt.sieve);
  auto b = b_r(0, opt.b_cutoff);
  return compare_gdist(x_grid, k, hists, b);
}

}  // namespace distexp
