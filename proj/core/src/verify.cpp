#include "cimono/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cimono/ci_length.hpp"
#include "cimono/crossing.hpp"
#include "cimono/distributions.hpp"
#include "cimono/gamma_bounds.hpp"
#include "cimono/specfun.hpp"

namespace cimono::verify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct MarginTracker {
  double margin = kInf;
  void update(double m) { margin = std::min(margin, m); }
  VerifyCheck as_check(std::string id) const {
    return {std::move(id), margin > 0.0, margin};
  }
};

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> xs(count);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i)
    xs[i] = std::exp(llo + (lhi - llo) * i / (count - 1));
  return xs;
}

}  // namespace

std::vector<VerifyCheck> verify_lemma2() {
  MarginTracker grid;
  for (int i = 1; i <= 10000; ++i) {
    const double x = std::pow(10.0, -3.0 + 7.0 * i / 10000.0);
    const auto chk = bounds::gamma_ratio_bound_check(x);
    grid.update(std::min(chk.lower_margin, chk.upper_margin));
  }
  MarginTracker semi;
  for (int k = 1; k <= 200; ++k) {
    const auto chk = bounds::gamma_ratio_bound_check(0.5 * k);
    semi.update(std::min(chk.lower_margin, chk.upper_margin));
  }
  return {grid.as_check("gamma-ratio-bound/log-grid"),
          semi.as_check("gamma-ratio-bound/semi-integer")};
}

std::vector<VerifyCheck> verify_en_chain() {
  constexpr int kMaxN = 10000;
  std::vector<double> en(kMaxN + 2);
  for (int n = 2; n <= kMaxN + 1; ++n) en[n] = bounds::e_n(n);

  const double e2 = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  const double e3 = std::sqrt(std::numbers::pi) / (2.0 * std::sqrt(6.0));
  const double e4 = 1.0 / std::sqrt(3.0 * std::numbers::pi);
  MarginTracker closed;
  closed.update(1e-9 - std::fabs(en[2] - e2));
  closed.update(1e-9 - std::fabs(en[3] - e3));
  closed.update(1e-9 - std::fabs(en[4] - e4));

  MarginTracker decreasing;
  for (int n = 2; n < kMaxN; ++n) decreasing.update(en[n] - en[n + 1]);

  MarginTracker separated;
  MarginTracker sandwich;
  for (int n = 4; n <= kMaxN; ++n) {
    const auto cmp = bounds::e_n_bound_comparison(n);
    separated.update(cmp.lower_bound_en - cmp.upper_bound_en1);
    sandwich.update(en[n] - cmp.lower_bound_en);
    sandwich.update(cmp.upper_bound_en1 - en[n + 1]);
  }

  // The gamma-ratio bound at x = (n-2)/2 sandwiches sqrt(n(n-1)) E_n, n >= 3.
  MarginTracker window;
  for (int n = 3; n <= kMaxN; ++n) {
    const double scaled = std::sqrt(n * (n - 1.0)) * en[n];
    const double x = 0.5 * (n - 2.0);
    window.update(scaled - std::sqrt(x + 0.25));
    window.update(std::sqrt(x + 0.5) - scaled);
  }

  return {closed.as_check("en/closed-forms"), decreasing.as_check("en/decreasing"),
          separated.as_check("en/bound-separation"),
          sandwich.as_check("en/bound-sandwich"),
          window.as_check("en/ratio-bound-window")};
}

std::vector<VerifyCheck> verify_ordering() {
  MarginTracker raw_order;
  for (double a : {0.5, 1.0, 2.0, 5.0})
    for (int n = 1; n <= 50; ++n)
      for (double alpha : {0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99})
        raw_order.update(specfun::inv_reg_gamma_p((n + 1) * a, alpha) -
                   specfun::inv_reg_gamma_p(n * a, alpha));

  // Both reversal inequalities need the orders alpha and 1-alpha on opposite
  // sides of the crossing probability, i.e. alpha < min(alpha*, 1-alpha*).
  MarginTracker below;
  MarginTracker above;
  for (int n : {1, 2, 5, 10}) {
    for (double a : {0.5, 1.0, 2.0}) {
      const auto pair = crossing::gamma_scale_pair(n, a);
      const double a_star = crossing::cdf_crossing(pair).alpha_star;
      const double both_sides = std::min(a_star, 1.0 - a_star);
      for (double frac : {0.5, 0.9}) {
        const double alpha = frac * both_sides;
        below.update(dist::gamma_quantile(pair.second, alpha) -
                     dist::gamma_quantile(pair.first, alpha));
        below.update(dist::gamma_quantile(pair.first, 1.0 - alpha) -
                     dist::gamma_quantile(pair.second, 1.0 - alpha));
      }
      // Flip side: an order u above alpha* whose complement is below it.
      const double u = 0.5 * (1.0 + a_star);
      if (u > a_star && 1.0 - u < a_star) {
        above.update(dist::gamma_quantile(pair.first, u) -
                     dist::gamma_quantile(pair.second, u));
        above.update(dist::gamma_quantile(pair.second, 1.0 - u) -
                     dist::gamma_quantile(pair.first, 1.0 - u));
      }
    }
  }
  return {raw_order.as_check("ordering/raw-stochastic-order"),
          below.as_check("ordering/reversal-below"),
          above.as_check("ordering/reversal-above")};
}

std::vector<VerifyCheck> verify_crossing() {
  std::vector<crossing::OrderedGammaPair> pairs;
  for (auto [n, a] : {std::pair{1, 1.0}, {1, 0.5}, {2, 1.0}, {5, 2.0}, {20, 1.0}})
    pairs.push_back(crossing::gamma_scale_pair(n, a));
  for (int n : {2, 3, 10, 25}) pairs.push_back(crossing::normal_variance_pair(n));

  MarginTracker residual;
  MarginTracker bracket;
  MarginTracker sign;
  MarginTracker unique;
  for (const auto& pair : pairs) {
    const auto report = crossing::cdf_crossing(pair);
    residual.update(1e-11 - report.residual);
    bracket.update(report.x_star - report.c1);
    bracket.update(report.c2 - report.x_star);

    const double xs = report.x_star;
    for (double x : log_spaced(1e-8 * xs, xs * (1.0 - 1e-6), 100))
      sign.update(crossing::cdf_difference(pair, x));
    const double x_hi =
        dist::gamma_quantile(pair.first, 0.999999);
    for (double x : log_spaced(xs * (1.0 + 1e-6), x_hi, 100))
      sign.update(-crossing::cdf_difference(pair, x));

    const double q_lo = dist::gamma_quantile(pair.first, 1e-8);
    const double q_hi = dist::gamma_quantile(pair.first, 1.0 - 1e-8);
    int changes = 0;
    int prev = 0;
    for (double x : log_spaced(q_lo, q_hi, 10000)) {
      const double d = crossing::cdf_difference(pair, x);
      const int s = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
      if (s != 0) {
        if (prev != 0 && s != prev) ++changes;
        prev = s;
      }
    }
    unique.update(1.0 - std::fabs(changes - 1.0));
  }
  return {residual.as_check("crossing/residual"), bracket.as_check("crossing/bracket"),
          sign.as_check("crossing/sign-pattern"),
          unique.as_check("crossing/uniqueness")};
}

std::vector<VerifyCheck> verify_monotonicity() {
  MarginTracker length_mono;
  MarginTracker reversal;
  for (double a : {0.5, 1.0, 2.0, 5.0}) {
    std::vector<double> a_crit(102);
    for (int n = 1; n <= 101; ++n)
      a_crit[n] =
          crossing::cdf_crossing(crossing::gamma_scale_pair(n, a)).alpha_critical;
    for (double alpha : {0.01, 0.05, 0.1}) {
      for (int n = 1; n <= 100; ++n) {
        if (!(alpha < a_crit[n])) continue;
        length_mono.update(ci::gamma_scale_mean_length(n, a, alpha, 1.0) -
                        ci::gamma_scale_mean_length(n + 1, a, alpha, 1.0));
        const double na = n * a, n1a = (n + 1) * a;
        reversal.update(specfun::inv_reg_gamma_p(n1a, 0.5 * alpha) / n1a -
                   specfun::inv_reg_gamma_p(na, 0.5 * alpha) / na);
        reversal.update(specfun::inv_reg_gamma_p(na, 1.0 - 0.5 * alpha) / na -
                   specfun::inv_reg_gamma_p(n1a, 1.0 - 0.5 * alpha) / n1a);
      }
    }
  }

  MarginTracker nv;
  {
    const double alpha = 0.05;
    for (int n = 2; n <= 100; ++n) {
      const auto report = crossing::cdf_crossing(crossing::normal_variance_pair(n));
      if (!(alpha < report.alpha_critical.value())) continue;
      nv.update(ci::normal_variance_mean_length(n, alpha, 1.0) -
                ci::normal_variance_mean_length(n + 1, alpha, 1.0));
    }
  }

  MarginTracker student;
  for (double alpha : {0.005, 0.025, 0.05, 0.25})
    for (int d = 1; d < 200; ++d)
      student.update(specfun::student_t_quantile(d, 1.0 - alpha) -
                     specfun::student_t_quantile(d + 1, 1.0 - alpha));

  MarginTracker nm;
  for (double alpha : {0.01, 0.05, 0.2})
    for (int n = 2; n < 200; ++n)
      nm.update(ci::normal_mean_mean_length(n, alpha, 1.0) -
                ci::normal_mean_mean_length(n + 1, alpha, 1.0));

  MarginTracker pareto;
  for (double alpha : {0.01, 0.05, 0.1})
    for (int n = 2; n < 100; ++n)
      pareto.update(ci::pareto_mean_length(n, alpha, 2.0) -
                    ci::pareto_mean_length(n + 1, alpha, 2.0));

  MarginTracker uniform;
  for (double alpha : {0.01, 0.05, 0.5, 0.9})
    for (int n = 1; n < 1000; ++n)
      uniform.update(ci::uniform_mean_length(n, alpha, 1.0) -
                     ci::uniform_mean_length(n + 1, alpha, 1.0));

  return {length_mono.as_check("monotonicity/gamma-scale"),
          reversal.as_check("monotonicity/normalized-quantile-reversal"),
          nv.as_check("monotonicity/normal-variance"),
          student.as_check("monotonicity/student-quantile"),
          nm.as_check("monotonicity/normal-mean"),
          pareto.as_check("monotonicity/pareto"),
          uniform.as_check("monotonicity/uniform")};
}

std::vector<VerifyCheck> verify_suite(std::string_view name) {
  if (name == "lemma2") return verify_lemma2();
  if (name == "en-chain") return verify_en_chain();
  if (name == "ordering") return verify_ordering();
  if (name == "crossing") return verify_crossing();
  if (name == "monotonicity") return verify_monotonicity();
  if (name == "all") {
    std::vector<VerifyCheck> all;
    for (const char* suite :
         {"lemma2", "en-chain", "ordering", "crossing", "monotonicity"}) {
      auto part = verify_suite(suite);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw std::domain_error("unknown verify suite '" + std::string(name) +
                          "' (expected lemma2, en-chain, ordering, crossing, "
                          "monotonicity, or all)");
}

}  // namespace cimono::verify
