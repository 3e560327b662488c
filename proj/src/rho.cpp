#include "distexp/rho.hpp"

#include <algorithm>

namespace distexp {

namespace {

const Rational kZero = 0;
const Rational kOne = 1;

}  // namespace

RhoTable::RhoTable(u64 n_capacity) : spf_(std::max<u64>(n_capacity, 2)) {}

std::vector<u64> RhoTable::proper_divisors(u64 n) {
  auto fact = factorize(n, spf_);
  std::vector<u64> divisors{1};
  for (const auto& pp : fact.factors) {
    std::size_t count = divisors.size();
    for (std::size_t i = 0; i < count; ++i) {
      divisors.push_back(divisors[i] * pp.prime);
    }
  }
  divisors.pop_back();  // the last appended value is n itself
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

const Rational& RhoTable::rho(u32 k, u64 n) {
  if (k == 0) throw std::invalid_argument("rho: k must be >= 1");
  if (n == 0) throw std::invalid_argument("rho: n must be >= 1");
  if (n == 1) return k == 1 ? kOne : kZero;
  if (n > spf_.limit()) {
    throw std::invalid_argument("rho: n exceeds table capacity " +
                                std::to_string(spf_.limit()));
  }
  auto fact = factorize(n, spf_);
  if (!is_squarefree(fact)) {
    throw std::invalid_argument("rho: n = " + std::to_string(n) +
                                " is not squarefree");
  }
  if (k == 1) return kZero;
  if (static_cast<u32>(omega(fact)) < k - 1) return kZero;

  auto it = memo_.find({k, n});
  if (it != memo_.end()) return it->second;

  Rational sum = 0;
  for (u64 d : proper_divisors(n)) {
    sum += rho(k - 1, d);
  }
  Rational value = sum / Rational(n - 1);
  return memo_.emplace(Key{k, n}, std::move(value)).first->second;
}

void RhoTable::build_up_to(u32 k_max, u64 n_max) {
  if (n_max > spf_.limit()) {
    throw std::invalid_argument("rho: build cutoff exceeds table capacity");
  }
  for (u64 n = 2; n <= n_max; ++n) {
    auto fact = factorize(n, spf_);
    if (!is_squarefree(fact)) continue;
    for (u32 k = 2; k <= k_max; ++k) rho(k, n);
  }
}

RhoSeriesSums rho_series_partial_sums(u32 k_max, u64 cutoff) {
  if (k_max == 0 || k_max > 32) {
    throw std::invalid_argument("rho series: k_max must be in [1, 32]");
  }
  if (cutoff < 1) throw std::invalid_argument("rho series: cutoff must be >= 1");

  RhoSeriesSums out;
  out.cutoff = cutoff;
  out.partial_sum.assign(k_max + 1, 0.0);
  out.empirical_scale.assign(k_max + 1, 0.0);
  out.terms_used.assign(k_max + 1, 0);

  // n = 1 contributes rho_1(1)/psi(1) = 1 to k = 1 and nothing elsewhere.
  out.partial_sum[1] = 1.0;
  out.terms_used[1] = 1;
  if (k_max == 1 || cutoff < 2) return out;

  SpfTable spf(std::max<u64>(cutoff, 2));

  // levels[k][n] = rho_k(n) for squarefree n, bottom-up DP. All terms are
  // nonnegative, so double precision tracks the exact recursion to ~1e-14
  // relative; the overlap tests against RhoTable pin this down.
  std::vector<std::vector<double>> levels(k_max + 1);
  for (u32 k = 2; k <= k_max; ++k) levels[k].assign(cutoff + 1, 0.0);
  std::vector<KahanSum> sums(k_max + 1);
  std::vector<u64> divisors;
  divisors.reserve(256);

  for (u64 n = 2; n <= cutoff; ++n) {
    auto fact = factorize(n, spf);
    if (!is_squarefree(fact)) continue;

    divisors.assign(1, 1);
    for (const auto& pp : fact.factors) {
      std::size_t count = divisors.size();
      for (std::size_t i = 0; i < count; ++i) {
        divisors.push_back(divisors[i] * pp.prime);
      }
    }
    u64 psi = dedekind_psi(fact);
    double inv_n1 = 1.0 / static_cast<double>(n - 1);
    u32 w = static_cast<u32>(fact.factors.size());
    for (u32 k = 2; k <= k_max; ++k) {
      if (w < k - 1) break;  // rho_k(n) = 0 below the chain-length floor
      double sum = (k == 2) ? 1.0 : 0.0;  // rho_1 contributes only at d = 1
      if (k > 2) {
        const auto& prev = levels[k - 1];
        for (u64 d : divisors) {
          if (d != n) sum += prev[d];
        }
      }
      if (sum == 0.0) continue;
      double value = sum * inv_n1;
      levels[k][n] = value;
      sums[k].add(value / static_cast<double>(psi));
      out.terms_used[k] += 1;
      out.empirical_scale[k] =
          std::max(out.empirical_scale[k], value * static_cast<double>(n - 1));
    }
  }
  for (u32 k = 2; k <= k_max; ++k) out.partial_sum[k] = sums[k].value();
  return out;
}

}  // namespace distexp
