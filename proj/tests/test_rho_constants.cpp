#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "distexp/constants.hpp"
#include "distexp/core_arith.hpp"
#include "distexp/powerful.hpp"
#include "distexp/rho.hpp"

using namespace distexp;

TEST_CASE("rho base cases and worked values") {
  RhoTable table(1000);
  CHECK(table.rho(1, 1) == Rational(1));
  CHECK(table.rho(1, 2) == Rational(0));
  CHECK(table.rho(1, 30) == Rational(0));
  CHECK(table.rho(2, 1) == Rational(0));
  CHECK(table.rho(2, 6) == Rational(1, 5));
  CHECK(table.rho(3, 6) == Rational(3, 10));   // (1/5)(rho_2(2) + rho_2(3))
  CHECK(table.rho(3, 30) == Rational(2687, 36540));
  // rho_2(n) = 1/(n-1) on every squarefree n > 1
  for (u64 n : {2ull, 3ull, 10ull, 210ull}) {
    CHECK(table.rho(2, n) == Rational(1, n - 1));
  }
}

TEST_CASE("rho rejects bad arguments") {
  RhoTable table(100);
  CHECK_THROWS_AS(table.rho(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(table.rho(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(table.rho(2, 12), std::invalid_argument);  // not squarefree
  CHECK_THROWS_AS(table.rho(2, 101), std::invalid_argument);  // beyond capacity
}

TEST_CASE("rho vanishes below the chain-length floor and stays nonnegative") {
  RhoTable table(2000);
  table.build_up_to(6, 2000);
  for (const auto& [key, value] : table.entries()) {
    auto [k, n] = key;
    CHECK(value >= 0);
    if (value != 0) {
      CHECK(static_cast<u32>(omega(factorize(n))) >= k - 1);
    }
  }
  CHECK(table.rho(4, 6) == Rational(0));  // omega(6) = 2 < k - 1 = 3
  CHECK(table.rho(5, 30) == Rational(0));
}

TEST_CASE("telescoping consistency over all memoized entries") {
  RhoTable table(1500);
  table.build_up_to(5, 1500);
  for (const auto& [key, value] : table.entries()) {
    auto [k, n] = key;
    if (k < 2 || n < 2) continue;
    Rational divisor_sum = 0;
    for (u64 d = 1; d < n; ++d) {
      if (n % d == 0) divisor_sum += table.rho(k - 1, d);
    }
    CHECK(Rational(n - 1) * value == divisor_sum);
  }
}

TEST_CASE("double DP matches the exact-rational recursion") {
  const u64 cutoff = 5000;
  auto sums = rho_series_partial_sums(5, cutoff);
  RhoTable table(cutoff);

  for (u32 k = 2; k <= 5; ++k) {
    Rational exact = 0;
    for (u64 n = 2; n <= cutoff; ++n) {
      auto fact = factorize(n);
      if (!is_squarefree(fact)) continue;
      exact += table.rho(k, n) / Rational(dedekind_psi(fact));
    }
    double exact_d = static_cast<double>(exact);
    CHECK(std::abs(sums.partial_sum[k] - exact_d) <=
          1e-12 * std::max(exact_d, 1e-30));
  }
  // rho_2(n) (n-1) = 1 exactly, so the fitted scale is 1 there.
  CHECK(sums.empirical_scale[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sums.empirical_scale[3] > 1.0);  // even n push rho_3 above rho_2
}

TEST_CASE("exact anchor A_1 from both routes") {
  const double c = six_over_pi_squared();
  for (u64 y : {10ull, 1'000ull, 1'000'000ull}) {
    auto est = ak_via_powerful(1, y);
    CHECK(est.value == c);
    CHECK(est.lower == c);
    CHECK(est.upper == c);  // the k = 1 tail is structurally empty
    CHECK(est.rigorous);
  }
  auto rho_est = ak_via_rho(1, 50);
  CHECK(rho_est.value == c);
  CHECK(rho_est.width() == 0.0);
}

TEST_CASE("A_k factorial bound at a unit-test scale") {
  auto estimates = ak_via_powerful_all(7, 100'000'000ull);
  const double c = six_over_pi_squared();
  double factorial = 1.0;
  for (u32 k = 1; k <= 7; ++k) {
    if (k >= 2) factorial *= (k - 1);
    CHECK(estimates[k - 1].upper <= c / factorial + 1e-12);
  }
}

TEST_CASE("the one-pass A_k batch matches single calls") {
  auto batch = ak_via_powerful_all(4, 200'000);
  for (u32 k = 1; k <= 4; ++k) {
    auto single = ak_via_powerful(k, 200'000);
    CHECK(batch[k - 1].value == single.value);
    CHECK(batch[k - 1].upper == single.upper);
    CHECK(batch[k - 1].terms_used == single.terms_used);
  }
}

TEST_CASE("cross-route agreement at modest cutoffs") {
  auto pow_route = ak_via_powerful_all(4, 1'000'000);
  auto rho_route = ak_via_rho_all(4, 20'000);
  for (u32 k = 1; k <= 4; ++k) {
    CAPTURE(k);
    CHECK(pow_route[k - 1].contains(rho_route[k - 1].value));
    CHECK(pow_route[k - 1].overlaps(rho_route[k - 1]));
    if (k >= 2) {
      CHECK_FALSE(rho_route[k - 1].rigorous);  // heuristic tail, flagged
      CHECK(pow_route[k - 1].rigorous);
    }
  }
}

TEST_CASE("rho-route partial sum is hand-checkable at N = 30") {
  RhoTable table(30);
  Rational exact = 0;
  for (u64 n = 2; n <= 30; ++n) {
    auto fact = factorize(n);
    if (!is_squarefree(fact)) continue;
    exact += table.rho(3, n) / Rational(dedekind_psi(fact));
  }
  double expected = six_over_pi_squared() * static_cast<double>(exact);
  auto est = ak_via_rho(3, 30);
  CHECK(est.value == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("intervals refine consistently with the cutoff") {
  for (u32 k : {2u, 3u}) {
    auto coarse = ak_via_powerful(k, 10'000);
    auto fine = ak_via_powerful(k, 1'000'000);
    CHECK(coarse.overlaps(fine));
    CHECK(fine.value >= coarse.value);  // positive terms only
    CHECK(fine.width() < coarse.width());
  }
  auto b_coarse = b_r(0, 10'000);
  auto b_fine = b_r(0, 1'000'000);
  CHECK(b_coarse.overlaps(b_fine));
  CHECK(b_fine.value >= b_coarse.value);
}

TEST_CASE("B_0 partial sum at y = 100 matches the explicit term list") {
  // special powerful numbers <= 100; 36 and 100 carry a repeated exponent.
  double expected = 0;
  for (u64 l : {1ull, 4ull, 8ull, 9ull, 16ull, 25ull, 27ull, 32ull, 49ull,
                64ull, 72ull, 81ull}) {
    expected += 1.0 / static_cast<double>(l);
  }
  auto est = b_r(0, 100);
  CHECK(est.value == doctest::Approx(expected).epsilon(1e-15));
  CHECK(est.terms_used == 12);
  CHECK(est.rigorous);
}

TEST_CASE("B_r partition recomposes the powerful reciprocal sum") {
  const u64 y = 1'000'000;
  auto estimates = b_r_all(12, y);
  double sum = 0;
  for (const auto& est : estimates) sum += est.value;
  CHECK(sum == doctest::Approx(powerful_reciprocal_partial_sum(y)).epsilon(1e-13));
}

TEST_CASE("powerful reciprocal partial sums bracket the Euler-product value") {
  const double p = powerful_reciprocal_sum();
  CHECK(p == doctest::Approx(1.9435964368207594).epsilon(1e-13));
  for (u64 y : {10'000ull, 1'000'000ull}) {
    double partial = powerful_reciprocal_partial_sum(y);
    CHECK(partial <= p);
    CHECK(partial + powerful_tail_bound(y) >= p);
  }
}

TEST_CASE("zeta3 series value") {
  CHECK(zeta3() == doctest::Approx(1.2020569031595942854).epsilon(1e-15));
}

TEST_CASE("m_phi with phi = 1 recovers the full density") {
  auto est = m_phi([](u32) { return 1.0; }, 2.0, 10, 1'000'000);
  CHECK(est.contains(1.0));  // sum over powerful l of (6/pi^2)/psi(l) = 1
  CHECK(est.value < 1.0);
  CHECK(est.value > 0.99);
}

TEST_CASE("m_phi argument checks") {
  auto one = [](u32) { return 1.0; };
  CHECK_THROWS_AS(m_phi(one, 1.0, 5, 1000), std::invalid_argument);
  CHECK_THROWS_AS(m_phi(one, 0.5, 5, 1000), std::invalid_argument);
  CHECK_THROWS_AS(m_phi(one, 2.0, 0, 1000), std::invalid_argument);
}

TEST_CASE("tail bound input validation") {
  CHECK_THROWS_AS(powerful_tail_bound(3), std::invalid_argument);
  CHECK_THROWS_AS(ak_via_powerful(0, 100), std::invalid_argument);
  CHECK_THROWS_AS(ak_via_rho(2, 1), std::invalid_argument);
}
