#include "oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cimono/specfun.hpp"

namespace oracle {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              int iterations) {
  double f_lo = f(lo);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ScanCrossing scan_crossing(const cimono::crossing::OrderedGammaPair& pair,
                           int grid_points) {
  using cimono::specfun::inv_reg_gamma_p;
  using cimono::specfun::reg_gamma_p;
  using cimono::specfun::reg_gamma_q;

  const double a1 = pair.first.shape, b1 = pair.first.scale;
  const double a2 = pair.second.shape, b2 = pair.second.scale;
  const auto diff = [&](double x) {
    const double z1 = x / b1, z2 = x / b2;
    if (z1 > a1 + 1.0 && z2 > a2 + 1.0)
      return reg_gamma_q(a2, z2) - reg_gamma_q(a1, z1);
    return reg_gamma_p(a1, z1) - reg_gamma_p(a2, z2);
  };

  const double x_lo = b1 * inv_reg_gamma_p(a1, 1e-8);
  const double x_hi = b1 * inv_reg_gamma_p(a1, 1.0 - 1e-8);
  const double l_lo = std::log(x_lo), l_hi = std::log(x_hi);

  int changes = 0;
  double cell_lo = 0.0, cell_hi = 0.0;
  int prev_sign = 0;
  double prev_x = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = std::exp(l_lo + (l_hi - l_lo) * i / (grid_points - 1));
    const double d = diff(x);
    const int sign = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    if (sign != 0) {
      if (prev_sign != 0 && sign != prev_sign) {
        ++changes;
        cell_lo = prev_x;
        cell_hi = x;
      }
      prev_sign = sign;
      prev_x = x;
    }
  }
  if (changes == 0)
    throw std::runtime_error("scan_crossing: no sign change found on the grid");

  const double x_star = bisect(diff, cell_lo, cell_hi);
  const double alpha_star = reg_gamma_p(a1, x_star / b1);
  return {x_star, alpha_star, 2.0 * std::min(alpha_star, 1.0 - alpha_star),
          changes};
}

}  // namespace oracle
