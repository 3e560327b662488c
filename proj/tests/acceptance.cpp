// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. The expensive sweeps (x up to 1e8) run multithreaded but the
// reported numbers are thread-count independent.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "distexp/constants.hpp"
#include "distexp/core_arith.hpp"
#include "distexp/empirical.hpp"
#include "distexp/identities.hpp"
#include "distexp/powerful.hpp"
#include "distexp/rho.hpp"
#include "distexp/squarefree.hpp"

using namespace distexp;

namespace {

int failures = 0;

void report_tagged(const std::string& tag, bool pass, const std::string& detail) {
  std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", tag.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void report(int criterion, bool pass, const std::string& detail) {
  report_tagged("criterion " + std::to_string(criterion), pass, detail);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// ---- criterion 1: exact anchor A_1 = 6/pi^2 both ways, < 1 s ----
void criterion_1() {
  auto start = std::chrono::steady_clock::now();
  auto pow_est = ak_via_powerful(1, 1'000'000);
  auto rho_est = ak_via_rho(1, 1'000);
  const double anchor = six_over_pi_squared();
  double elapsed = seconds_since(start);
  bool pass = std::abs(pow_est.value - anchor) < 5e-13 &&
              std::abs(rho_est.value - anchor) < 5e-13 &&
              pow_est.width() == 0.0 && rho_est.width() == 0.0 && elapsed < 1.0;
  report(1, pass,
         "A_1 = " + fmt(pow_est.value) + " (both routes, zero width) vs 6/pi^2 = " +
             fmt(anchor) + ", " + fmt(elapsed) + " s");
}

// ---- criterion 2: interval overlap of the two A_k routes, k = 1..5 ----
void criterion_2() {
  auto pow_route = ak_via_powerful_all(5, 100'000'000ull);
  auto rho_route = ak_via_rho_all(5, 1'000'000);
  bool pass = true;
  std::string detail = "rho value inside rigorous powerful interval:";
  for (u32 k = 1; k <= 5; ++k) {
    bool inside = pow_route[k - 1].contains(rho_route[k - 1].value);
    pass = pass && inside;
    detail += " k=" + std::to_string(k) + (inside ? ":ok" : ":MISS");
  }
  detail += "  (A_2 ~ " + fmt(rho_route[1].value) + ", A_3 ~ " +
            fmt(rho_route[2].value) + ")";
  report(2, pass, detail);
}

// ---- criterion 3: A_k upper endpoints below (6/pi^2)/(k-1)! ----
void criterion_3() {
  auto estimates = ak_via_powerful_all(8, 1'000'000'000ull);
  const double c = six_over_pi_squared();
  bool pass = true;
  double factorial = 1.0;
  double worst_margin = 1e300;
  for (u32 k = 1; k <= 8; ++k) {
    if (k >= 2) factorial *= (k - 1);
    double bound = c / factorial + 1e-12;
    worst_margin = std::min(worst_margin, bound - estimates[k - 1].upper);
    pass = pass && estimates[k - 1].upper <= bound;
  }
  report(3, pass,
         "upper(A_k) <= (6/pi^2)/(k-1)! + 1e-12 for k = 1..8 at y = 1e9, "
         "slack >= " + fmt(worst_margin));
}

// ---- criterion 4: density partitions ----
void criterion_4() {
  // sum_k A_k -> 1 with the powerful tail at 1e8
  auto aks = ak_via_powerful_all(10, 100'000'000ull);
  double a_sum = 0.0;
  for (const auto& est : aks) a_sum += est.value;
  double eps_a = six_over_pi_squared() * powerful_tail_bound(100'000'000ull) + 1e-12;
  bool a_ok = a_sum >= 1.0 - eps_a && a_sum <= 1.0 + eps_a;

  // sum_r B_r -> zeta(2)zeta(3)/zeta(6) with the tail at 1e9
  auto brs = b_r_all(12, 1'000'000'000ull);
  double b_sum = 0.0;
  for (const auto& est : brs) b_sum += est.value;
  const double p = powerful_reciprocal_sum();
  double eps_b = powerful_tail_bound(1'000'000'000ull) + 1e-10;
  bool b_ok = b_sum >= p - eps_b && b_sum <= p + 1e-10;

  report(4, a_ok && b_ok,
         "sum A_k = " + fmt(a_sum) + " in 1 +- " + fmt(eps_a) +
             "; sum B_r = " + fmt(b_sum) + " vs zeta-product " + fmt(p) +
             " within [P - " + fmt(eps_b) + ", P]");
}

// Shared sweep for criteria 5 and 6. The band and ratio checks read the
// pinned checkpoints 1e6/1e7/1e8; the error-exponent fit reads the top
// decades 1e7..1e9 where every k <= 4 has left its pre-asymptotic regime
// (N_4 is still 9% under its density at 1e8, so a power-law fit across
// earlier decades measures the transition instead of the error term).
struct SweepData {
  std::vector<u64> grid;
  std::vector<FgHistograms> hists;

  FgHistograms at(u64 x) const {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i] == x) return hists[i];
    }
    throw std::logic_error("checkpoint missing");
  }
};

SweepData run_sweep() {
  SweepData data;
  data.grid = {1'000'000,   10'000'000,  30'000'000,
               100'000'000, 300'000'000, 1'000'000'000};
  auto start = std::chrono::steady_clock::now();
  data.hists = count_fg_distributions_grid(data.grid, {});
  std::printf("       (histogram sweep to 1e9: %.1f s)\n", seconds_since(start));
  return data;
}

// ---- criterion 5: N_k(x)/x near A_k with sublinear error growth ----
void criterion_5(const SweepData& data) {
  auto aks = ak_via_powerful_all(5, 10'000'000'000ull);
  bool band_ok = true;
  std::string detail;
  for (u32 k = 1; k <= 5; ++k) {  // the band invariant extends through k = 5
    for (u64 x : {1'000'000ull, 10'000'000ull, 100'000'000ull}) {
      double density =
          static_cast<double>(data.at(x).f.count(k)) / static_cast<double>(x);
      double tolerance = 5.0 * std::pow(static_cast<double>(x), -0.4);
      double distance = 0.0;
      if (density < aks[k - 1].lower) distance = aks[k - 1].lower - density;
      if (density > aks[k - 1].upper) distance = density - aks[k - 1].upper;
      if (distance > tolerance) {
        band_ok = false;
        detail += " miss(k=" + std::to_string(k) + ",x=" + std::to_string(x) + ")";
      }
    }
  }

  std::vector<u64> beta_grid{10'000'000, 30'000'000, 100'000'000, 300'000'000,
                             1'000'000'000};
  std::vector<FgHistograms> beta_hists;
  for (u64 x : beta_grid) beta_hists.push_back(data.at(x));
  bool beta_ok = true;
  for (u32 k = 1; k <= 4; ++k) {
    auto report_k = compare_fdist(beta_grid, k, beta_hists, aks[k - 1], 0.6);
    double beta = report_k.error_exponent.value_or(1.0);
    beta_ok = beta_ok && beta <= 0.6;
    detail += " beta_" + std::to_string(k) + "=" + fmt(beta);
  }
  report(5, band_ok && beta_ok,
         "|N_k(x)/x - A_k| <= 5 x^-0.4 for k = 1..4, x in {1e6,1e7,1e8}; beta "
         "fitted on {1e7..1e9}:" + detail);
}

// ---- criterion 6: M_k(x) against B x (log log x)^k / (k! log x) ----
void criterion_6(const SweepData& data) {
  auto b = b_r(0, 1'000'000'000ull);
  std::vector<u64> grid{1'000'000, 10'000'000, 100'000'000};
  std::vector<FgHistograms> hists;
  for (u64 x : grid) hists.push_back(data.at(x));
  bool pass = true;
  std::string detail = "B ~ " + fmt(b.value) + ";";
  for (u32 k = 0; k <= 2; ++k) {
    auto rep = compare_gdist(grid, k, hists, b);
    for (const auto& row : rep.rows) {
      pass = pass && std::isfinite(row.ratio) && row.ratio > 0.0;
    }
    detail += " k=" + std::to_string(k) + " ratios(1e6,1e7,1e8)=" +
              fmt(rep.rows[0].ratio) + "," + fmt(rep.rows[1].ratio) + "," +
              fmt(rep.rows[2].ratio) + ";";
    if (k == 0) {
      double dev_small = std::abs(rep.rows[0].ratio - 1.0);
      double dev_large = std::abs(rep.rows[2].ratio - 1.0);
      pass = pass && dev_large < dev_small;
      pass = pass && rep.rows[2].ratio >= 0.5 && rep.rows[2].ratio <= 1.5;
    }
  }
  report(6, pass, detail);
}

// ---- invariant: moment sums against M_phi at x = 1e8 ----
void moments_invariant(const SweepData& data) {
  struct Phi {
    const char* label;
    double growth;
    double (*fn)(u32);
  };
  const Phi phis[] = {
      {"1", 2.0, [](u32) { return 1.0; }},
      {"k", 2.0, [](u32 k) { return static_cast<double>(k); }},
      {"k^2", 3.0, [](u32 k) { return static_cast<double>(k) * k; }},
      {"2^k", 3.0, [](u32 k) { return std::pow(2.0, k); }},
  };
  const u64 x = 100'000'000ull;
  auto f_table = data.at(x).f;
  const double band = 5.0 * std::pow(static_cast<double>(x), -0.4);
  bool pass = true;
  std::string detail;
  for (const auto& phi : phis) {
    auto est = m_phi(phi.fn, phi.growth, 20, x);
    double empirical = moment_sum(f_table, phi.fn) / static_cast<double>(x);
    double distance = 0.0;
    if (empirical < est.lower - band) distance = est.lower - band - empirical;
    if (empirical > est.upper + band) distance = empirical - est.upper - band;
    pass = pass && distance == 0.0;
    detail += std::string(" phi=") + phi.label + ": " + fmt(empirical) + " vs M=" +
              fmt(est.value) + " +- " + fmt(est.width() / 2 + band) +
              (distance == 0.0 ? "" : " MISS");
  }
  report_tagged("moment invariant", pass, std::string("at 1e8:") + detail);
}

// ---- criterion 7: identity suites ----
void criterion_7() {
  std::mt19937_64 rng(20240801);
  std::uniform_int_distribution<int> k_dist(1, 4);
  std::uniform_int_distribution<i64> a0_dist(-3, 3);
  std::uniform_real_distribution<double> x_dist(1.1, 5.0);
  u64 nested_failures = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<double> xs(k_dist(rng));
    for (auto& x : xs) x = x_dist(rng);
    if (!nested_geometric_check(a0_dist(rng), xs).pass) ++nested_failures;
  }

  auto sf = lemma_squarefree_check({1'000, 10'000, 100'000, 1'000'000},
                                   {1, 2, 6, 30, 210}, 2.0);

  auto landau = landau_check({100'000, 1'000'000, 10'000'000, 100'000'000},
                             {1, 2, 6}, 3, 0.5);

  bool pass = nested_failures == 0 && sf.pass && landau.pass;
  report(7, pass,
         "nested failures " + std::to_string(nested_failures) + "/100; C_emp = " +
             fmt(sf.fitted_constant) + " <= 2; landau trend over s=1..3, h in "
             "{1,2,6} (deviation at 1e8 below its value at 1e6): " +
             (landau.trend_ok ? "ok" : "violated"));
}

// ---- criterion 8: exhaustive oracle equivalences at 1e6 ----
void criterion_8() {
  const u64 x = 1'000'000;
  auto spf = build_spf(x);

  bool stream_ok = true;
  {
    auto streamed = powerful_up_to(x);
    std::vector<u64> scanned;
    for (u64 n = 1; n <= x; ++n) {
      if (is_powerful(factorize(n, spf))) scanned.push_back(n);
    }
    stream_ok = streamed == scanned;
  }

  SieveConfig single;
  single.threads = 1;
  auto hist_single = count_fg_distributions(x, single);
  SieveConfig many;
  many.threads = 4;
  many.block_size = 1 << 16;
  auto hist_many = count_fg_distributions(x, many);
  bool parallel_ok = hist_single.f.counts == hist_many.f.counts &&
                     hist_single.g.counts == hist_many.g.counts;

  u64 specials = 0;
  double f_sum_direct = 0.0;
  for (u64 n = 1; n <= x; ++n) {
    auto fact = factorize(n, spf);
    if (is_special(fact)) ++specials;
    f_sum_direct += f_distinct_exponents(fact);
  }
  bool m0_ok = hist_single.g.count(0) == specials;
  double f_sum_hist =
      moment_sum(hist_single.f, [](u32 k) { return static_cast<double>(k); });
  bool moment_ok = std::abs(f_sum_hist - f_sum_direct) < 1e-6;

  bool pass = stream_ok && parallel_ok && m0_ok && moment_ok;
  report(8, pass,
         std::string("x <= 1e6: stream==scan ") + (stream_ok ? "ok" : "FAIL") +
             ", M_0==#special " + (m0_ok ? "ok" : "FAIL") + ", moment==loop " +
             (moment_ok ? "ok" : "FAIL") + ", parallel bit-identical " +
             (parallel_ok ? "ok" : "FAIL"));
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  auto sweep = run_sweep();
  criterion_5(sweep);
  criterion_6(sweep);
  moments_invariant(sweep);
  criterion_7();
  criterion_8();
  std::printf("%d criteria failed; total %.1f s\n", failures,
              seconds_since(start));
  return failures == 0 ? 0 : 1;
}
