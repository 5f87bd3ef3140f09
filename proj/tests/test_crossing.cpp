#include <doctest.h>

#include <cmath>

#include "cimono/crossing.hpp"
#include "cimono/specfun.hpp"
#include "oracles.hpp"

using namespace cimono;
using namespace cimono::crossing;

namespace {
const OrderedGammaPair kExpErlang{dist::GammaSpec(1, 1), dist::GammaSpec(2, 0.5)};
}

TEST_CASE("ordered pair validation") {
  CHECK_THROWS_AS(OrderedGammaPair(dist::GammaSpec(2, 1), dist::GammaSpec(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(OrderedGammaPair(dist::GammaSpec(1, 1), dist::GammaSpec(2, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(OrderedGammaPair(dist::GammaSpec(1, 1), dist::GammaSpec(1, 0.5)),
                  std::invalid_argument);
}

TEST_CASE("density ratio minimizer formula") {
  CHECK(density_ratio_minimizer(kExpErlang) == doctest::Approx(1.0).epsilon(1e-15));
  const OrderedGammaPair p2{dist::GammaSpec(2, 1), dist::GammaSpec(4, 0.5)};
  CHECK(density_ratio_minimizer(p2) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("density crossings of the exponential/Erlang pair") {
  // bisection on x = ln(4x)
  const auto [c1, c2] = density_crossings(kExpErlang);
  CHECK(c1 == doctest::Approx(0.35740295618138884).epsilon(1e-11));
  CHECK(c2 == doctest::Approx(2.1532923641103494).epsilon(1e-11));
  CHECK(std::fabs(log_density_ratio(kExpErlang, c1)) <= 1e-12);
  CHECK(std::fabs(log_density_ratio(kExpErlang, c2)) <= 1e-12);
}

TEST_CASE("cdf crossing of the exponential/Erlang pair") {
  const auto report = cdf_crossing(kExpErlang);
  // bisection on e^x = 1 + 2x, then 1 - e^-x*
  CHECK(report.x_star.value() == doctest::Approx(1.2564312086261697).epsilon(1e-12));
  CHECK(report.alpha_star.value() ==
        doctest::Approx(0.71533186295916162).epsilon(1e-12));
  CHECK(report.alpha_critical.value() ==
        doctest::Approx(0.56933627408167675).epsilon(1e-11));
  CHECK(report.residual <= 1e-11);
  CHECK(report.c1.value() < report.x_star.value());
  CHECK(report.x_star.value() < report.c2.value());

  // closed-form CDFs on either side of x*
  CHECK(cdf_difference(kExpErlang, 0.5) ==
        doctest::Approx(0.39346934028736658 - 0.26424111765711533).epsilon(1e-12));
  CHECK(cdf_difference(kExpErlang, 0.5) > 0.0);
  CHECK(cdf_difference(kExpErlang, 2.0) < 0.0);
}

TEST_CASE("single-crossing sign pattern and uniqueness on a fine grid") {
  for (const auto& pair :
       {gamma_scale_pair(1, 1.0), gamma_scale_pair(4, 0.5), normal_variance_pair(6)}) {
    const auto report = cdf_crossing(pair);
    const double xs = report.x_star;
    for (int i = 0; i < 100; ++i) {
      const double lo = std::exp(std::log(1e-8 * xs) +
                                 (std::log(xs * (1.0 - 1e-6)) - std::log(1e-8 * xs)) *
                                     i / 99.0);
      CHECK(cdf_difference(pair, lo) > 0.0);
    }
    const double x_hi = dist::gamma_quantile(pair.first, 0.999999);
    for (int i = 0; i < 100; ++i) {
      const double hi = std::exp(std::log(xs * (1.0 + 1e-6)) +
                                 (std::log(x_hi) - std::log(xs * (1.0 + 1e-6))) * i /
                                     99.0);
      CHECK(cdf_difference(pair, hi) < 0.0);
    }
    const auto scan = oracle::scan_crossing(pair);
    CHECK(scan.sign_changes == 1);
    CHECK(std::fabs(scan.x_star - xs) <= 1e-9 * xs);
  }
}

TEST_CASE("alpha* for the gamma-scale pair at n = 1, a = 1") {
  CHECK(alpha_star_gamma_scale(1, 1.0).value() ==
        doctest::Approx(0.71533186295916162).epsilon(1e-12));
  // contract-only at a = 0.5
  const auto report = cdf_crossing(gamma_scale_pair(1, 0.5));
  CHECK(report.alpha_star.value() > 0.0);
  CHECK(report.alpha_star.value() < 1.0);
  CHECK(report.residual <= 1e-11);
}

TEST_CASE("alpha* evaluation is deterministic") {
  const double first = alpha_star_gamma_scale(2, 1.0);
  for (int i = 0; i < 3; ++i) CHECK(alpha_star_gamma_scale(2, 1.0).value() == first);
}

TEST_CASE("normal-variance pairs and alpha*") {
  const auto p2 = normal_variance_pair(2);
  CHECK(p2.first.shape.value() == 0.5);
  CHECK(p2.first.scale.value() == 2.0);
  CHECK(p2.second.shape.value() == 1.0);
  CHECK(p2.second.scale.value() == 1.0);

  // fine-grid sign scan oracle (step 1e-4 equivalent)
  CHECK(alpha_star_normal_variance(3).value() ==
        doctest::Approx(0.7271902220199159).epsilon(1e-9));

  // crossing probability drifts down toward 1/2, critical level climbs
  double prev_star = 1.0, prev_crit = 0.0;
  for (int n = 2; n <= 12; ++n) {
    const auto report = cdf_crossing(normal_variance_pair(n));
    CHECK(report.alpha_star.value() < prev_star);
    CHECK(report.alpha_critical.value() > prev_crit);
    prev_star = report.alpha_star;
    prev_crit = report.alpha_critical;
  }
  CHECK_THROWS_AS(alpha_star_normal_variance(1), std::domain_error);
}

TEST_CASE("implementation crossing agrees with the scan oracle") {
  for (int n : {1, 3, 10, 25}) {
    for (double a : {0.5, 1.0, 2.0}) {
      const auto pair = gamma_scale_pair(n, a);
      const auto report = cdf_crossing(pair);
      const auto scan = oracle::scan_crossing(pair);
      CHECK(std::fabs(report.alpha_star.value() - scan.alpha_star) <= 1e-6);
      CHECK(std::fabs(report.alpha_critical.value() - scan.alpha_critical) <= 1e-6);
    }
  }
}

TEST_CASE("raw stochastic ordering of unit-scale gamma quantiles") {
  using cimono::specfun::inv_reg_gamma_p;
  for (double a : {0.5, 1.0, 2.0})
    for (int n : {1, 2, 5, 20})
      for (double alpha : {0.01, 0.1, 0.5, 0.9, 0.99})
        CHECK(inv_reg_gamma_p(n * a, alpha) < inv_reg_gamma_p((n + 1) * a, alpha));
}

TEST_CASE("quantile-order reversal around alpha*") {
  for (int n : {1, 3}) {
    const auto pair = gamma_scale_pair(n, 1.0);
    const auto report = cdf_crossing(pair);
    const double star = report.alpha_star;
    const double both_sides = std::min(star, 1.0 - star);
    for (double frac : {0.3, 0.8}) {
      const double alpha = frac * both_sides;
      CHECK(dist::gamma_quantile(pair.first, alpha) <
            dist::gamma_quantile(pair.second, alpha));
      CHECK(dist::gamma_quantile(pair.first, 1.0 - alpha) >
            dist::gamma_quantile(pair.second, 1.0 - alpha));
    }
    // orders strictly between 1-alpha* and alpha* sit left of the crossing
    const double u = 0.5 * (1.0 + star);
    CHECK(dist::gamma_quantile(pair.first, u) > dist::gamma_quantile(pair.second, u));
    CHECK(dist::gamma_quantile(pair.first, 1.0 - u) <
          dist::gamma_quantile(pair.second, 1.0 - u));
  }
}
