#include "distexp/constants.hpp"

#include <algorithm>
#include <cmath>

#include "distexp/core_arith.hpp"
#include "distexp/powerful.hpp"
#include "distexp/rho.hpp"

namespace distexp {

namespace {

// Relative rounding allowance applied to accumulated series values.
constexpr double kRoundingSlack = 1e-13;

double factorial(u32 n) {
  double f = 1.0;
  for (u32 i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double powerful_tail_bound(u64 y) {
  if (y < 4) throw std::invalid_argument("powerful_tail_bound: y must be >= 4");
  u64 bmax = icbrt(y);
  auto squarefree = squarefree_flags_up_to(bmax);
  KahanSum sum;
  for (u64 b = 1; b <= bmax; ++b) {
    if (!squarefree[b]) continue;
    u64 cube = b * b * b;
    u64 a_floor = isqrt(y / cube);  // >= 1 since cube <= y
    sum.add(1.0 / (static_cast<double>(cube) * static_cast<double>(a_floor)));
  }
  // Every b > floor(cbrt(y)) contributes at most (pi^2/6)/b^3 and
  // sum_{b > B} 1/b^3 < 1/(2 B^2).
  constexpr double pi = 3.14159265358979323846264338327950288;
  sum.add((pi * pi / 6.0) / (2.0 * static_cast<double>(bmax) * static_cast<double>(bmax)));
  return sum.value() * (1.0 + kRoundingSlack);
}

std::vector<ConstantEstimate> ak_via_powerful_all(u32 k_max, u64 y) {
  if (k_max == 0) throw std::invalid_argument("ak_via_powerful: k must be >= 1");
  if (y < 4) throw std::invalid_argument("ak_via_powerful: y must be >= 4");

  std::vector<KahanSum> sums(k_max + 1);
  std::vector<u64> terms(k_max + 1, 0);
  PowerfulStream stream(y);
  while (!stream.done()) {
    auto fact = factorize(stream.next());
    u32 k = static_cast<u32>(f_distinct_exponents(fact)) + 1;
    if (k > k_max) continue;
    sums[k].add(1.0 / static_cast<double>(dedekind_psi(fact)));
    terms[k] += 1;
  }

  const double c = six_over_pi_squared();
  const double tail = c * powerful_tail_bound(y);
  std::vector<ConstantEstimate> out;
  out.reserve(k_max);
  for (u32 k = 1; k <= k_max; ++k) {
    ConstantEstimate est;
    est.name = "A_k";
    est.k_or_r = k;
    est.value = c * sums[k].value();
    est.cutoff = y;
    est.terms_used = terms[k];
    est.rigorous = true;
    if (k == 1) {
      // f(l) = 0 only for l = 1, so the truncation tail is empty.
      est.value = c;
      est.lower = c;
      est.upper = c;
      est.terms_used = 1;
    } else {
      double slack = est.value * kRoundingSlack;
      est.lower = est.value - slack;
      est.upper = est.value + tail + slack;
    }
    out.push_back(std::move(est));
  }
  return out;
}

ConstantEstimate ak_via_powerful(u32 k, u64 y) {
  return ak_via_powerful_all(k, y).back();
}

std::vector<ConstantEstimate> ak_via_rho_all(u32 k_max, u64 cutoff) {
  if (k_max == 0) throw std::invalid_argument("ak_via_rho: k must be >= 1");
  if (cutoff < 2) throw std::invalid_argument("ak_via_rho: cutoff must be >= 2");

  auto sums = rho_series_partial_sums(k_max, cutoff);
  const double c = six_over_pi_squared();
  std::vector<ConstantEstimate> out;
  out.reserve(k_max);
  for (u32 k = 1; k <= k_max; ++k) {
    ConstantEstimate est;
    est.name = "A_k";
    est.k_or_r = k;
    est.cutoff = cutoff;
    est.terms_used = sums.terms_used[k];
    if (k == 1) {
      est.value = c;
      est.lower = c;
      est.upper = c;
      est.rigorous = true;  // the k = 1 series is the single term n = 1
    } else {
      est.value = c * sums.partial_sum[k];
      double slack = est.value * kRoundingSlack;
      // Never let an empty observation window (no nonzero rho_k term below
      // the cutoff) collapse the heuristic tail to zero; rho_2's exact scale
      // of 1 is the floor.
      double scale = std::max(sums.empirical_scale[k], 1.0);
      double tail = c * scale / static_cast<double>(cutoff);
      est.lower = est.value - slack;
      est.upper = est.value + tail + slack;
      est.rigorous = false;  // heuristic tail model, see header
    }
    out.push_back(std::move(est));
  }
  return out;
}

ConstantEstimate ak_via_rho(u32 k, u64 cutoff) {
  return ak_via_rho_all(k, cutoff).back();
}

std::vector<ConstantEstimate> b_r_all(u32 r_max, u64 y) {
  if (y < 4) throw std::invalid_argument("b_r: y must be >= 4");
  std::vector<KahanSum> sums(r_max + 1);
  std::vector<u64> terms(r_max + 1, 0);
  PowerfulStream stream(y);
  while (!stream.done()) {
    u64 l = stream.next();
    u32 r = static_cast<u32>(g_deficiency(factorize(l)));
    if (r > r_max) continue;
    sums[r].add(1.0 / static_cast<double>(l));
    terms[r] += 1;
  }
  const double tail = powerful_tail_bound(y);
  std::vector<ConstantEstimate> out;
  out.reserve(r_max + 1);
  for (u32 r = 0; r <= r_max; ++r) {
    ConstantEstimate est;
    est.name = "B_r";
    est.k_or_r = r;
    est.value = sums[r].value();
    est.cutoff = y;
    est.terms_used = terms[r];
    est.rigorous = true;
    double slack = est.value * kRoundingSlack;
    est.lower = est.value - slack;
    est.upper = est.value + tail + slack;
    out.push_back(std::move(est));
  }
  return out;
}

ConstantEstimate b_r(u32 r, u64 y) {
  return b_r_all(r, y).back();
}

ConstantEstimate m_phi(const std::function<double(u32)>& phi, double a,
                       u32 k_cutoff, u64 y) {
  if (!(a > 1.0)) throw std::invalid_argument("m_phi: growth base a must be > 1");
  if (k_cutoff < 1) throw std::invalid_argument("m_phi: cutoff K must be >= 1");

  auto aks = ak_via_powerful_all(k_cutoff, y);
  const double c = six_over_pi_squared();

  KahanSum value;
  double spread = 0.0;  // sum over k of |phi(k)| * (per-k truncation tail)
  for (u32 k = 1; k <= k_cutoff; ++k) {
    const auto& est = aks[k - 1];
    double p = phi(k);
    value.add(est.value * p);
    // The k-restricted tail is at most the shared powerful tail and also at
    // most the distance from the partial sum to the (6/pi^2)/(k-1)! cap.
    double cap = std::max(0.0, c / factorial(k - 1) - est.value);
    spread += std::abs(p) * std::min(est.upper - est.value, cap);
  }

  // Series tail: sum_{k > K} a^k (6/pi^2)/(k-1)!; summed term by term until
  // the geometric remainder bound a/k < 1/2 closes it.
  double series_tail = 0.0;
  double term = c * std::pow(a, static_cast<double>(k_cutoff + 1)) / factorial(k_cutoff);
  for (u32 k = k_cutoff + 1;; ++k) {
    series_tail += term;
    double ratio = a / static_cast<double>(k);
    if (ratio < 0.5) {
      series_tail += term * ratio / (1.0 - ratio);
      break;
    }
    term *= ratio;
  }

  ConstantEstimate est;
  est.name = "M_phi";
  est.k_or_r = 0;
  est.value = value.value();
  est.cutoff = y;
  est.terms_used = k_cutoff;
  est.rigorous = true;
  double slack = std::abs(est.value) * kRoundingSlack + 1e-15;
  est.lower = est.value - spread - series_tail - slack;
  est.upper = est.value + spread + series_tail + slack;
  return est;
}

double zeta3() {
  // zeta(3) = (1/64) sum_{n>=0} (-1)^n (205 n^2 + 250 n + 77) (n!)^10 / ((2n+1)!)^5
  // (about five digits per term).
  double sum = 0.0;
  double n_fact = 1.0;
  for (u32 n = 0; n <= 12; ++n) {
    if (n > 0) n_fact *= n;
    double num = (205.0 * n * n + 250.0 * n + 77.0) * std::pow(n_fact, 10);
    double den = 1.0;
    for (u32 i = 1; i <= 2 * n + 1; ++i) den *= i;
    double term = num / std::pow(den, 5);
    sum += (n % 2 == 0) ? term : -term;
  }
  return sum / 64.0;
}

double powerful_reciprocal_sum() {
  constexpr double pi = 3.14159265358979323846264338327950288;
  const double z2 = pi * pi / 6.0;
  const double z6 = std::pow(pi, 6) / 945.0;
  return z2 * zeta3() / z6;
}

double powerful_reciprocal_partial_sum(u64 y) {
  KahanSum sum;
  PowerfulStream stream(y);
  while (!stream.done()) sum.add(1.0 / static_cast<double>(stream.next()));
  return sum.value();
}

}  // namespace distexp
