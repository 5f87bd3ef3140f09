#include <doctest.h>

#include <cmath>

#include "cimono/gamma_bounds.hpp"

using namespace cimono::bounds;

TEST_CASE("gamma ratio closed forms") {
  CHECK(gamma_ratio(0.5) == doctest::Approx(0.88622692545275794).epsilon(1e-13));
  CHECK(gamma_ratio(1.0) == doctest::Approx(1.1283791670955126).epsilon(1e-13));
  CHECK(gamma_ratio(2.0) == doctest::Approx(1.5045055561273502).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_ratio(0.0), std::domain_error);
}

TEST_CASE("two-sided bound at spot points") {
  const auto at1 = gamma_ratio_bound_check(1.0);
  CHECK(at1.lower == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));
  CHECK(at1.upper == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
  CHECK(at1.holds);
  CHECK(at1.lower_margin > 0.0);
  CHECK(at1.upper_margin > 0.0);

  const auto at_half = gamma_ratio_bound_check(0.5);
  CHECK(at_half.lower == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
  CHECK(at_half.upper == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(at_half.holds);

  const auto at100 = gamma_ratio_bound_check(100.0);
  CHECK(at100.holds);
  // bounds tighten as x grows
  CHECK(at100.upper_margin < at1.upper_margin);
  CHECK(at100.lower_margin < at1.lower_margin);
}

TEST_CASE("bound holds strictly over the documented grids") {
  for (int i = 1; i <= 10000; ++i) {
    const auto chk = gamma_ratio_bound_check(std::pow(10.0, -3.0 + 7.0 * i / 10000.0));
    CHECK(chk.holds);
  }
  for (int k = 1; k <= 200; ++k) CHECK(gamma_ratio_bound_check(0.5 * k).holds);
}

TEST_CASE("E_n closed forms at n = 2, 3, 4") {
  CHECK(std::fabs(e_n(2) - 0.3989422804014327) <= 1e-9);
  CHECK(std::fabs(e_n(3) - 0.36180062727913381) <= 1e-9);
  CHECK(std::fabs(e_n(4) - 0.32573500793527993) <= 1e-9);
  CHECK_THROWS_AS(e_n(1), std::domain_error);
}

TEST_CASE("E_n strictly decreasing through n = 10000") {
  double prev = e_n(2);
  for (int n = 3; n <= 10000; ++n) {
    const double cur = e_n(n);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("bound comparison separates exactly where the argument says") {
  // n = 2, 3: the two bound formulas touch or cross; the explicit values
  // settle those cases instead.
  const auto at2 = e_n_bound_comparison(2);
  CHECK(at2.separated == (at2.lower_bound_en > at2.upper_bound_en1));
  CHECK(at2.lower_bound_en < at2.upper_bound_en1);

  const auto at3 = e_n_bound_comparison(3);
  // both bounds equal sqrt(1/8) analytically at n = 3
  CHECK(at3.lower_bound_en == doctest::Approx(at3.upper_bound_en1).epsilon(1e-15));

  const auto at4 = e_n_bound_comparison(4);
  CHECK(at4.lower_bound_en == doctest::Approx(std::sqrt(1.25) / std::sqrt(12.0)));
  CHECK(at4.upper_bound_en1 == doctest::Approx(std::sqrt(2.0) / std::sqrt(20.0)));
  CHECK(at4.separated);

  CHECK(e_n_bound_comparison(100).separated);

  for (int n = 4; n <= 10000; ++n) {
    const auto cmp = e_n_bound_comparison(n);
    CHECK(cmp.separated);
    // the sandwich is consistent with the true E_n on both sides
    CHECK(cmp.lower_bound_en < e_n(n));
    CHECK(e_n(n + 1) < cmp.upper_bound_en1);
  }
}

TEST_CASE("scaled E_n sits inside the bound window at semi-integer arguments") {
  for (int n = 3; n <= 2000; ++n) {
    const double scaled = std::sqrt(n * (n - 1.0)) * e_n(n);
    const double x = 0.5 * (n - 2.0);
    CHECK(scaled > std::sqrt(x + 0.25));
    CHECK(scaled < std::sqrt(x + 0.5));
  }
}
