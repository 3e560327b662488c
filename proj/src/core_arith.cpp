#include "distexp/core_arith.hpp"

#include <algorithm>
#include <bit>

namespace distexp {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent-style Pollard rho; n must be odd composite and not a prime power
// that trial division already handled.
u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  u64 c = 1;
  while (true) {
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = gcd_u64(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
    ++c;
  }
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  // Deterministic witness set for all n < 3.3 * 10^24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

SpfTable::SpfTable(u64 limit, u64 limit_ceiling) : limit_(limit) {
  if (limit < 2) {
    throw std::invalid_argument("SpfTable: limit must be >= 2");
  }
  if (limit > limit_ceiling || limit > 0xFFFFFFFFull) {
    throw capacity_error("SpfTable: limit " + std::to_string(limit) +
                         " exceeds ceiling of " +
                         std::to_string(std::min<u64>(limit_ceiling, 0xFFFFFFFFull)) +
                         " entries (4 bytes each)");
  }
  spf_.assign(limit + 1, 0);
  for (u64 p = 2; p <= limit; ++p) {
    if (spf_[p] != 0) continue;
    for (u64 m = p; m <= limit; m += p) {
      if (spf_[m] == 0) spf_[m] = static_cast<u32>(p);
    }
  }
}

SpfTable build_spf(u64 limit, u64 limit_ceiling) {
  return SpfTable(limit, limit_ceiling);
}

Factorization factorize(u64 n, const SpfTable& table) {
  if (n == 0 || n > table.limit()) {
    throw std::invalid_argument("factorize: n must satisfy 1 <= n <= table limit");
  }
  Factorization fact;
  fact.n = n;
  while (n > 1) {
    u64 p = table.spf(n);
    u32 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    fact.factors.push_back({p, e});
  }
  return fact;
}

Factorization factorize(u64 n) {
  if (n == 0) {
    throw std::invalid_argument("factorize: n must be positive");
  }
  Factorization fact;
  fact.n = n;
  u64 m = n;
  auto strip = [&](u64 p) {
    if (m % p != 0) return;
    u32 e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    fact.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel up to cbrt of the shrinking cofactor.
  for (u64 d = 5; static_cast<u128>(d) * d * d <= m; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (m > 1) {
    // All prime factors of m now exceed cbrt(m), so m has at most two.
    u64 root;
    if (is_perfect_square(m, &root)) {
      fact.factors.push_back({root, 2});
    } else if (is_prime(m)) {
      fact.factors.push_back({m, 1});
    } else {
      u64 p = pollard_rho(m);
      u64 q = m / p;
      fact.factors.push_back({std::min(p, q), 1});
      fact.factors.push_back({std::max(p, q), 1});
    }
  }
  std::sort(fact.factors.begin(), fact.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return fact;
}

int f_distinct_exponents(const Factorization& fact) {
  u64 mask = 0;
  for (const auto& pp : fact.factors) mask |= 1ull << (pp.exponent & 63u);
  return std::popcount(mask);
}

int omega(const Factorization& fact) {
  return static_cast<int>(fact.factors.size());
}

int g_deficiency(const Factorization& fact) {
  return omega(fact) - f_distinct_exponents(fact);
}

bool is_powerful(const Factorization& fact) {
  return std::all_of(fact.factors.begin(), fact.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent >= 2; });
}

bool is_squarefree(const Factorization& fact) {
  return std::all_of(fact.factors.begin(), fact.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

bool is_special(const Factorization& fact) {
  return g_deficiency(fact) == 0;
}

u64 dedekind_psi(const Factorization& fact) {
  u128 value = 1;
  for (const auto& pp : fact.factors) {
    for (u32 i = 0; i + 1 < pp.exponent; ++i) value *= pp.prime;
    value *= pp.prime + 1;
    if (value > static_cast<u128>(~0ull)) {
      throw std::overflow_error("dedekind_psi: value exceeds 64 bits for n = " +
                                std::to_string(fact.n));
    }
  }
  return static_cast<u64>(value);
}

SquarefreePowerfulSplit powerful_part(const Factorization& fact) {
  SquarefreePowerfulSplit split;
  for (const auto& pp : fact.factors) {
    if (pp.exponent == 1) {
      split.squarefree = checked_mul(split.squarefree, pp.prime);
    } else {
      for (u32 i = 0; i < pp.exponent; ++i) {
        split.powerful = checked_mul(split.powerful, pp.prime);
      }
    }
  }
  return split;
}

}  // namespace distexp
