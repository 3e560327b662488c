#include "distexp/squarefree.hpp"

#include <algorithm>
#include <cmath>

#include "distexp/core_arith.hpp"
#include "distexp/powerful.hpp"

namespace distexp {

namespace {

constexpr std::size_t kMaxOmegaBuckets = 24;

std::vector<u64> distinct_prime_factors(u64 h) {
  std::vector<u64> ps;
  for (const auto& pp : factorize(h).factors) ps.push_back(pp.prime);
  return ps;
}

struct BlockScratch {
  std::vector<u64> prod;
  std::vector<u8> omega;
  std::vector<u8> skip;  // bit0: not squarefree, bit1: shares a factor with h
};

// Exact omega profile of the squarefree n in [lo, hi] coprime to h.
void profile_block(u64 lo, u64 hi_inclusive, const std::vector<u32>& primes,
                   const std::vector<u64>& h_primes, BlockScratch& scratch,
                   std::vector<u64>& counts) {
  const std::size_t len = static_cast<std::size_t>(hi_inclusive - lo + 1);
  scratch.prod.assign(len, 1);
  scratch.omega.assign(len, 0);
  scratch.skip.assign(len, 0);

  auto first_multiple = [lo](u64 p) {
    u64 first = ((lo + p - 1) / p) * p;
    return first;
  };

  for (u32 p : primes) {
    for (u64 m = first_multiple(p); m <= hi_inclusive; m += p) {
      std::size_t i = static_cast<std::size_t>(m - lo);
      scratch.prod[i] *= p;
      ++scratch.omega[i];
    }
    u64 pp = static_cast<u64>(p) * p;
    if (pp <= hi_inclusive) {
      for (u64 m = first_multiple(pp); m <= hi_inclusive; m += pp) {
        scratch.skip[m - lo] |= 1;
      }
    }
  }
  for (u64 q : h_primes) {
    for (u64 m = first_multiple(q); m <= hi_inclusive; m += q) {
      scratch.skip[m - lo] |= 2;
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (scratch.skip[i]) continue;
    u64 n = lo + i;
    u32 s = scratch.omega[i] + (scratch.prod[i] < n ? 1u : 0u);
    counts[std::min<std::size_t>(s, kMaxOmegaBuckets - 1)] += 1;
  }
}

void trim(std::vector<u64>& counts) {
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
}

}  // namespace

u64 SquarefreeProfile::total() const {
  u64 t = 0;
  for (u64 c : count_by_omega) t += c;
  return t;
}

u64 SquarefreeProfile::with_omega(u32 s) const {
  return s < count_by_omega.size() ? count_by_omega[s] : 0;
}

std::vector<SquarefreeProfile> squarefree_coprime_profile_grid(
    const std::vector<u64>& x_grid, u64 h, const SieveConfig& cfg) {
  if (x_grid.empty()) return {};
  if (!std::is_sorted(x_grid.begin(), x_grid.end())) {
    throw std::invalid_argument("profile grid must be increasing");
  }
  if (x_grid.front() == 0 || h == 0) {
    throw std::invalid_argument("profile grid requires x >= 1 and h >= 1");
  }
  u64 x_max = x_grid.back();
  cfg.require_capacity(x_max, "squarefree_coprime_profile");

  auto primes = primes_up_to(isqrt(x_max));
  auto h_primes = distinct_prime_factors(h);
  auto blocks = make_blocks(1, x_max, cfg.block_size, x_grid);

  unsigned workers = resolve_threads(cfg.threads);
  std::vector<BlockScratch> scratch(workers);
  std::vector<std::vector<u64>> block_counts(blocks.size());

  parallel_for_blocks(blocks.size(), cfg.threads, [&](std::size_t b, unsigned w) {
    block_counts[b].assign(kMaxOmegaBuckets, 0);
    profile_block(blocks[b].first, blocks[b].second - 1, primes, h_primes,
                  scratch[w], block_counts[b]);
  });

  std::vector<SquarefreeProfile> out;
  out.reserve(x_grid.size());
  std::vector<u64> running(kMaxOmegaBuckets, 0);
  std::size_t gi = 0;
  for (std::size_t b = 0; b < blocks.size() && gi < x_grid.size(); ++b) {
    for (std::size_t s = 0; s < kMaxOmegaBuckets; ++s) running[s] += block_counts[b][s];
    while (gi < x_grid.size() && blocks[b].second - 1 == x_grid[gi]) {
      SquarefreeProfile prof;
      prof.x = x_grid[gi];
      prof.h = h;
      prof.count_by_omega = running;
      trim(prof.count_by_omega);
      out.push_back(std::move(prof));
      ++gi;
    }
  }
  return out;
}

SquarefreeProfile squarefree_coprime_profile(u64 x, u64 h, const SieveConfig& cfg) {
  return squarefree_coprime_profile_grid({x}, h, cfg).front();
}

u64 count_squarefree_coprime(double x, u64 h, const SieveConfig& cfg) {
  if (h == 0) throw std::invalid_argument("Q(x;h): h must be >= 1");
  if (!(x >= 1.0)) return 0;
  return squarefree_coprime_profile(static_cast<u64>(x), h, cfg).total();
}

u64 count_squarefree_coprime_omega(double x, u64 h, u32 s, const SieveConfig& cfg) {
  if (h == 0 || s == 0) {
    throw std::invalid_argument("Q_s(x;h): requires h >= 1 and s >= 1");
  }
  if (!(x >= 1.0)) return 0;
  return squarefree_coprime_profile(static_cast<u64>(x), h, cfg).with_omega(s);
}

u64 count_squarefree_coprime_mobius(u64 x, u64 h) {
  if (h == 0) throw std::invalid_argument("Q(x;h): h must be >= 1");
  if (x == 0) return 0;
  auto h_primes = distinct_prime_factors(h);

  // #{m <= y : gcd(m, h) = 1} by inclusion-exclusion over h's prime divisors.
  auto coprime_count = [&](u64 y) {
    i64 total = 0;
    std::size_t subsets = 1ull << h_primes.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      u64 d = 1;
      int bits = 0;
      for (std::size_t j = 0; j < h_primes.size(); ++j) {
        if (mask & (1ull << j)) {
          d *= h_primes[j];
          ++bits;
        }
      }
      i64 term = static_cast<i64>(y / d);
      total += (bits % 2 == 0) ? term : -term;
    }
    return total;
  };

  u64 dmax = isqrt(x);
  // Moebius values up to sqrt(x).
  std::vector<i64> mu(dmax + 1, 1);
  std::vector<bool> composite(dmax + 1, false);
  std::vector<u32> primes;
  for (u64 i = 2; i <= dmax; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<u32>(i));
      mu[i] = -1;
    }
    for (u32 p : primes) {
      u64 m = i * p;
      if (m > dmax) break;
      composite[m] = true;
      if (i % p == 0) {
        mu[m] = 0;
        break;
      }
      mu[m] = -mu[i];
    }
  }

  i64 total = 0;
  for (u64 d = 1; d <= dmax; ++d) {
    if (mu[d] == 0) continue;
    bool coprime = true;
    for (u64 q : h_primes) {
      if (d % q == 0) {
        coprime = false;
        break;
      }
    }
    if (!coprime) continue;
    total += mu[d] * coprime_count(x / (d * d));
  }
  return static_cast<u64>(total);
}

}  // namespace distexp
