#include "distexp/identities.hpp"

#include <algorithm>
#include <cmath>

#include "distexp/constants.hpp"
#include "distexp/core_arith.hpp"
#include "distexp/squarefree.hpp"

namespace distexp {

namespace {

// Truncated nested sum over a0 < a1 < ... < ak <= a0 + depth by suffix DP:
// G_j(t) = sum_{a_j > t, a_j <= cap} x_j^{-a_j} G_{j+1}(a_j), G_{k+1} = 1.
double truncated_nested_sum(i64 a0, const std::vector<double>& xs, u64 depth) {
  const std::size_t k = xs.size();
  const i64 cap = a0 + static_cast<i64>(depth);
  const std::size_t width = depth + 1;  // indices a0..cap

  std::vector<double> next(width + 1, 1.0);  // G_{k+1} as a suffix constant
  std::vector<double> cur(width + 1, 0.0);
  for (std::size_t j = k; j >= 1; --j) {
    const double x = xs[j - 1];
    cur.assign(width + 1, 0.0);
    // cur[t - a0] = G_j(t); recurrence downward from t = cap (empty sum).
    for (i64 t = cap - 1; t >= a0; --t) {
      std::size_t i = static_cast<std::size_t>(t - a0);
      double term = std::pow(x, -static_cast<double>(t + 1)) * next[i + 1];
      cur[i] = cur[i + 1] + term;
    }
    std::swap(cur, next);
  }
  return next[0];
}

double log_log(double x) { return std::log(std::log(x)); }

}  // namespace

NestedGeometricReport nested_geometric_check(i64 a0, const std::vector<double>& xs,
                                             std::optional<u64> truncation) {
  if (xs.empty()) throw std::invalid_argument("nested check: need k >= 1 factors");
  for (double x : xs) {
    if (!(x > 1.0 + 1e-6)) {
      throw std::invalid_argument("nested check: every x_j must exceed 1 + 1e-6");
    }
  }
  NestedGeometricReport report;
  report.a0 = a0;
  report.xs = xs;

  const std::size_t k = xs.size();
  const double x_min = *std::min_element(xs.begin(), xs.end());

  // Closed form: (x1...xk)^(-a0) * prod_j (x_j ... x_k - 1)^(-1).
  double full_product = 1.0;
  for (double x : xs) full_product *= x;
  double rhs = std::pow(full_product, -static_cast<double>(a0));
  double suffix = 1.0;
  for (std::size_t j = k; j >= 1; --j) {
    suffix *= xs[j - 1];
    rhs /= suffix - 1.0;
  }
  report.rhs = rhs;

  // Tail of the truncation (tuples with a_k > a0 + T): bounded by the
  // unordered relaxation prod_{j<k} x_j^(-a0)/(x_j - 1) times the geometric
  // remainder of x_k beyond a0 + T.
  auto tail_bound_at = [&](u64 depth) {
    double prefix = 1.0;
    for (std::size_t j = 0; j + 1 < k; ++j) {
      prefix *= std::pow(xs[j], -static_cast<double>(a0)) / (xs[j] - 1.0);
    }
    double xk = xs[k - 1];
    double geo = std::pow(xk, -static_cast<double>(a0 + static_cast<i64>(depth))) /
                 (xk - 1.0);
    return prefix * geo;
  };

  u64 depth;
  if (truncation.has_value()) {
    depth = *truncation;
  } else {
    depth = static_cast<u64>(std::ceil(std::log(1e13) / std::log(x_min))) + k;
    while (tail_bound_at(depth) > 1e-12 && depth < 1'000'000) depth += 64;
  }
  report.truncation = depth;
  report.tail_bound = tail_bound_at(depth);
  report.lhs = truncated_nested_sum(a0, xs, depth);
  report.difference = report.lhs - report.rhs;
  report.pass = std::abs(report.difference) <= report.tail_bound + 1e-12;
  return report;
}

SquarefreeLemmaReport lemma_squarefree_check(const std::vector<u64>& x_grid,
                                             const std::vector<u64>& h_set,
                                             double threshold,
                                             const SieveConfig& cfg) {
  SquarefreeLemmaReport report;
  report.threshold = threshold;
  const double c = six_over_pi_squared();
  for (u64 h : h_set) {
    auto fact = factorize(h);
    double h_over_psi = static_cast<double>(h) / static_cast<double>(dedekind_psi(fact));
    double four_pow = std::pow(4.0, omega(fact));
    auto profiles = squarefree_coprime_profile_grid(x_grid, h, cfg);
    for (const auto& prof : profiles) {
      SquarefreeLemmaRow row;
      row.x = prof.x;
      row.h = h;
      row.q = prof.total();
      row.main_term = c * h_over_psi * static_cast<double>(prof.x);
      double xd = static_cast<double>(prof.x);
      row.normalized_error = std::abs(static_cast<double>(row.q) - row.main_term) /
                             (four_pow * (std::sqrt(xd) + 1.0));
      report.fitted_constant = std::max(report.fitted_constant, row.normalized_error);
      report.rows.push_back(row);
    }
  }
  report.pass = report.fitted_constant <= threshold;
  return report;
}

LandauReport landau_check(const std::vector<u64>& x_grid,
                          const std::vector<u64>& h_set, u32 s_max, double delta,
                          const SieveConfig& cfg) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("landau check: delta must lie in (0, 1)");
  }
  if (s_max == 0) throw std::invalid_argument("landau check: s_max must be >= 1");
  LandauReport report;
  for (u64 x : x_grid) {
    if (x < 3) throw std::invalid_argument("landau check: grid values must be >= 3");
  }
  for (u64 h : h_set) {
    for (u64 x : x_grid) {
      if (static_cast<double>(h) > std::pow(static_cast<double>(x), delta)) {
        throw std::invalid_argument("landau check: h = " + std::to_string(h) +
                                    " exceeds x^delta for x = " + std::to_string(x));
      }
    }
  }

  for (u64 h : h_set) {
    auto profiles = squarefree_coprime_profile_grid(x_grid, h, cfg);
    for (u32 s = 1; s <= s_max; ++s) {
      for (const auto& prof : profiles) {
        LandauRow row;
        row.x = prof.x;
        row.h = h;
        row.s = s;
        row.q_s = prof.with_omega(s);
        double xd = static_cast<double>(prof.x);
        double sf = 1.0;
        for (u32 i = 2; i < s; ++i) sf *= i;
        row.main_term = xd * std::pow(log_log(xd), static_cast<double>(s - 1)) /
                        (sf * std::log(xd));
        row.ratio = static_cast<double>(row.q_s) / row.main_term;
        row.scaled_dev = std::abs(row.ratio - 1.0) * log_log(xd) /
                         log_log(static_cast<double>(h) + 2.0);
        report.fitted_constant = std::max(report.fitted_constant, row.scaled_dev);
        report.rows.push_back(row);
      }
    }
  }

  // Trend: per (h, s) series along the grid, the deviation at the last point
  // must drop below its value two points earlier.
  report.trend_ok = true;
  if (x_grid.size() >= 3) {
    for (u64 h : h_set) {
      for (u32 s = 1; s <= s_max; ++s) {
        std::vector<double> devs;
        for (const auto& row : report.rows) {
          if (row.h == h && row.s == s) devs.push_back(std::abs(row.ratio - 1.0));
        }
        if (devs.size() >= 3 &&
            devs.back() >= devs[devs.size() - 3]) {
          report.trend_ok = false;
        }
      }
    }
  }
  report.pass = report.trend_ok && std::isfinite(report.fitted_constant);
  return report;
}

}  // namespace distexp
