#include "cimono/gamma_bounds.hpp"

#include <cmath>

#include "cimono/specfun.hpp"

namespace cimono::bounds {

double gamma_ratio(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("gamma_ratio: x must be finite and > 0");
  return std::exp(specfun::log_gamma(x + 1.0) - specfun::log_gamma(x + 0.5));
}

GammaRatioBoundCheck gamma_ratio_bound_check(double x) {
  const double ratio = gamma_ratio(x);
  const double lower = std::sqrt(x + 0.25);
  const double upper = std::sqrt(x + 0.5);
  return {x,      lower,         ratio,        upper,
          lower < ratio && ratio < upper, ratio - lower, upper - ratio};
}

double e_n(int n) {
  if (n < 2) throw std::domain_error("e_n: n must be >= 2");
  const double half_n = 0.5 * n;
  return std::exp(specfun::log_gamma(half_n) - specfun::log_gamma(half_n - 0.5) -
                  0.5 * (std::log(static_cast<double>(n)) +
                         std::log(static_cast<double>(n - 1))));
}

EnBoundComparison e_n_bound_comparison(int n) {
  if (n < 2) throw std::domain_error("e_n_bound_comparison: n must be >= 2");
  const double nd = n;
  const double lower_en =
      std::sqrt(0.5 * (nd - 2.0) + 0.25) / std::sqrt(nd * (nd - 1.0));
  const double upper_en1 =
      std::sqrt(0.5 * (nd - 1.0) + 0.5) / std::sqrt(nd * (nd + 1.0));
  return {n, lower_en, upper_en1, lower_en > upper_en1};
}

}  // namespace cimono::bounds
