#include "cimono/crossing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cimono/specfun.hpp"

namespace cimono::crossing {

namespace {

constexpr int kMaxDoublings = 1024;  // 2^10 doublings per side, then give up
constexpr double kRatioTol = 1e-12;
constexpr double kCdfTol = 1e-11;

struct RatioCoeffs {
  double log_coeff;   // a1 - a2 (< 0)
  double lin_coeff;   // 1/b2 - 1/b1 (> 0)
  double constant;    // a2 ln b2 - a1 ln b1 + lnG(a2) - lnG(a1)
};

RatioCoeffs ratio_coeffs(const OrderedGammaPair& p) {
  const double a1 = p.first.shape, b1 = p.first.scale;
  const double a2 = p.second.shape, b2 = p.second.scale;
  return {a1 - a2, 1.0 / b2 - 1.0 / b1,
          a2 * std::log(b2) - a1 * std::log(b1) + specfun::log_gamma(a2) -
              specfun::log_gamma(a1)};
}

double eval_ratio(const RatioCoeffs& c, double x) {
  return c.log_coeff * std::log(x) + c.lin_coeff * x + c.constant;
}

// One convex root of r on a sign-changing bracket [lo, hi] with
// r(lo) * r(hi) < 0; bisection with a Newton polish at the end.
double solve_ratio_root(const RatioCoeffs& c, double lo, double hi, double r_lo) {
  for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double rm = eval_ratio(c, mid);
    if (std::fabs(rm) <= kRatioTol) return mid;
    if ((rm > 0.0) == (r_lo > 0.0))
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const double r = eval_ratio(c, x);
    const double dr = c.log_coeff / x + c.lin_coeff;
    const double xn = x - r / dr;
    if (!(xn > 0.0) || !std::isfinite(xn)) break;
    x = xn;
    if (std::fabs(eval_ratio(c, x)) <= kRatioTol) break;
  }
  return x;
}

}  // namespace

double density_ratio_minimizer(const OrderedGammaPair& pair) {
  const double a1 = pair.first.shape, b1 = pair.first.scale;
  const double a2 = pair.second.shape, b2 = pair.second.scale;
  return (a2 - a1) / (1.0 / b2 - 1.0 / b1);
}

double log_density_ratio(const OrderedGammaPair& pair, double x) {
  if (!(x > 0.0)) throw std::domain_error("log_density_ratio: x must be > 0");
  return eval_ratio(ratio_coeffs(pair), x);
}

double cdf_difference(const OrderedGammaPair& pair, double x) {
  const double z1 = x / pair.first.scale;
  const double z2 = x / pair.second.scale;
  const double a1 = pair.first.shape, a2 = pair.second.shape;
  // Past both means the CDFs approach 1 and P1 - P2 cancels; switch to the
  // relative-accurate upper tails: F1 - F2 = Q2 - Q1.
  if (z1 > a1 + 1.0 && z2 > a2 + 1.0)
    return specfun::reg_gamma_q(a2, z2) - specfun::reg_gamma_q(a1, z1);
  return specfun::reg_gamma_p(a1, z1) - specfun::reg_gamma_p(a2, z2);
}

DensityCrossings density_crossings(const OrderedGammaPair& pair) {
  const RatioCoeffs coeffs = ratio_coeffs(pair);
  const double xm = density_ratio_minimizer(pair);
  const double rm = eval_ratio(coeffs, xm);
  if (!(rm < 0.0))
    throw ConsistencyError(
        "density_crossings: log density ratio is nonnegative at its minimizer "
        "(no crossing)");

  // r -> +inf at 0 and at infinity, so expand geometrically from the
  // minimizer until the sign flips on each side.
  double lo = xm;
  int k = 0;
  while (eval_ratio(coeffs, lo) < 0.0) {
    lo *= 0.5;
    if (++k > kMaxDoublings)
      throw ConsistencyError("density_crossings: no sign change below minimizer");
  }
  const double c1 = solve_ratio_root(coeffs, lo, std::min(2.0 * lo, xm),
                                     eval_ratio(coeffs, lo));

  double hi = xm;
  k = 0;
  while (eval_ratio(coeffs, hi) < 0.0) {
    hi *= 2.0;
    if (++k > kMaxDoublings)
      throw ConsistencyError("density_crossings: no sign change above minimizer");
  }
  const double c2 = solve_ratio_root(coeffs, std::max(0.5 * hi, xm), hi,
                                     eval_ratio(coeffs, std::max(0.5 * hi, xm)));
  return {c1, c2};
}

CrossingReport cdf_crossing(const OrderedGammaPair& pair) {
  const auto [c1, c2] = density_crossings(pair);

  double lo = c1, hi = c2;
  double d_lo = cdf_difference(pair, lo);
  const double d_hi = cdf_difference(pair, hi);
  if (!(d_lo > 0.0) || !(d_hi < 0.0))
    throw ConsistencyError(
        "cdf_crossing: F1-F2 does not change sign between the density "
        "crossings; quantile kernel inconsistency");

  for (int it = 0; it < 200 && (hi - lo) > 4e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double dm = cdf_difference(pair, mid);
    if (dm > 0.0) {
      lo = mid;
      d_lo = dm;
    } else {
      hi = mid;
    }
  }
  const double x_star = 0.5 * (lo + hi);
  const double residual = std::fabs(cdf_difference(pair, x_star));
  if (!(residual <= kCdfTol))
    throw ConsistencyError("cdf_crossing: residual " + std::to_string(residual) +
                           " above tolerance at the located crossing");
  const double alpha_star = dist::gamma_cdf(pair.first, x_star);
  const double alpha_critical = 2.0 * std::min(alpha_star, 1.0 - alpha_star);
  return {PositiveReal(c1),        PositiveReal(c2),
          PositiveReal(x_star),    Probability(alpha_star),
          Probability(alpha_critical), residual};
}

OrderedGammaPair gamma_scale_pair(int n, double a) {
  if (n < 1) throw std::domain_error("gamma_scale_pair: n must be >= 1");
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::domain_error("gamma_scale_pair: a must be finite and > 0");
  const double na = n * a;
  const double n1a = (n + 1) * a;
  return {dist::GammaSpec(na, 1.0 / na), dist::GammaSpec(n1a, 1.0 / n1a)};
}

OrderedGammaPair normal_variance_pair(int n) {
  if (n < 2) throw std::domain_error("normal_variance_pair: n must be >= 2");
  return {dist::chi_square_as_scaled_gamma(n - 1),
          dist::chi_square_as_scaled_gamma(n)};
}

Probability alpha_star_gamma_scale(int n, double a) {
  return cdf_crossing(gamma_scale_pair(n, a)).alpha_star;
}

Probability alpha_star_normal_variance(int n) {
  return cdf_crossing(normal_variance_pair(n)).alpha_star;
}

}  // namespace cimono::crossing
