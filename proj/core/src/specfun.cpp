#include "cimono/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace cimono::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny =
    std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
constexpr int kSeriesMaxIter = 5000;
constexpr int kInverseMaxIter = 200;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::domain_error(std::string(name) + " must be finite and > 0, got " +
                            std::to_string(v));
}

void require_probability(double p, const char* name) {
  if (!(p > 0.0) || !(p < 1.0))
    throw std::domain_error(std::string(name) + " must lie in (0, 1), got " +
                            std::to_string(p));
}

// Lanczos g = 7, 9 coefficients (Godfrey's table); the shifted sum
// A(z) = c0 + sum_k c_k / (z + k) keeps |relative error| < ~2e-15 on Re z > 0.
constexpr double kLanczos[9] = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.32342877765307884865282588943,
    -176.61502916214059906584551354002,
    12.507343278686904814458936853347,
    -0.13857109526572011689554706984971,
    9.9843695780195708595638234185e-6,
    1.5056327351493115583383579667e-7};

constexpr double kLogRootTwoPi = 0.91893853320467274178032973640562;

// stirlerr(a) = lnGamma(a) - [(a - 1/2) ln a - a + ln sqrt(2 pi)].
double stirlerr(double a) {
  if (a < 15.0)
    return log_gamma(a) - ((a - 0.5) * std::log(a) - a + kLogRootTwoPi);
  constexpr double S0 = 1.0 / 12, S1 = 1.0 / 360, S2 = 1.0 / 1260,
                   S3 = 1.0 / 1680, S4 = 1.0 / 1188;
  const double nn = a * a;
  return (S0 - (S1 - (S2 - (S3 - S4 / nn) / nn) / nn) / nn) / a;
}

// Deviance a ln(a/x) + x - a >= 0, via the even series in (a-x)/(a+x) when
// x ~ a, where the direct form loses all its digits.
double gamma_deviance(double a, double x) {
  if (std::fabs(a - x) < 0.1 * (a + x)) {
    const double v = (a - x) / (a + x);
    double s = (a - x) * v;
    double ej = 2.0 * a * v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v * v;
      const double snew = s + ej / (2.0 * j + 1.0);
      if (snew == s) return snew;
      s = snew;
    }
    return s;
  }
  return a * std::log(a / x) + x - a;
}

// exp(a ln x - x - lnGamma(a)) = x * pdf of Gamma(a, 1); the direct log form
// cancels catastrophically for large a, so split through stirlerr/deviance.
double gamma_prefactor(double a, double x) {
  if (a < 15.0) return std::exp(a * std::log(x) - x - log_gamma(a));
  return std::exp(-stirlerr(a) - gamma_deviance(a, x)) *
         std::sqrt(a / (2.0 * std::numbers::pi));
}

// Lower-tail power series: P(a, x) = x^a e^-x / Gamma(a+1) * sum. Converges
// fast for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int n = 0; n < kSeriesMaxIter; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps)
      return sum * gamma_prefactor(a, x);
  }
  throw ConvergenceError("reg_gamma_p: series failed to converge", a, x);
}

// Upper-tail continued fraction (modified Lentz). Converges fast for
// x >= a + 1.
double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kSeriesMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) return h * gamma_prefactor(a, x);
  }
  throw ConvergenceError("reg_gamma_q: continued fraction failed to converge", a, x);
}

// Continued fraction for the incomplete beta (modified Lentz). Valid for
// x below the symmetry switch point.
double inc_beta_cf(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kSeriesMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) return h;
  }
  throw ConvergenceError("reg_inc_beta: continued fraction failed to converge", a, b);
}

double log_beta(double a, double b) {
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma: x");
  const double z = x - 1.0;
  double ag = kLanczos[0];
  for (int k = 1; k < 9; ++k) ag += kLanczos[k] / (z + k);
  const double t = z + 7.5;
  return (z + 0.5) * std::log(t) - t + kLogRootTwoPi + std::log(ag);
}

double reg_gamma_p(double a, double x) {
  require_positive(a, "reg_gamma_p: a");
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::domain_error("reg_gamma_p: x must be finite and >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double reg_gamma_q(double a, double x) {
  require_positive(a, "reg_gamma_q: a");
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::domain_error("reg_gamma_q: x must be finite and >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double inv_reg_gamma_p(double a, double p) {
  require_positive(a, "inv_reg_gamma_p: a");
  require_probability(p, "inv_reg_gamma_p: p");

  const double gln = log_gamma(a);
  double x;
  if (a > 1.0) {
    // Wilson-Hilferty: Gamma(a,1)^(1/3) is nearly normal.
    const double z = normal_quantile(p);
    const double w = 1.0 - 1.0 / (9.0 * a) + z / (3.0 * std::sqrt(a));
    x = a * w * w * w;
    // Deep left tail bends the cube negative; start from the leading term
    // of P(a, x) ~ x^a / Gamma(a+1) instead.
    if (!(x > 0.0)) x = std::exp((std::log(p) + log_gamma(a + 1.0)) / a);
  } else {
    // Small-shape start from the leading behaviour of P near 0 and 1.
    const double t = 1.0 - a * (0.253 + a * 0.12);
    if (p < t)
      x = std::pow(p / t, 1.0 / a);
    else
      x = 1.0 - std::log(1.0 - (p - t) / (1.0 - t));
  }

  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (int it = 0; it < kInverseMaxIter; ++it) {
    const double err = reg_gamma_p(a, x) - p;
    if (std::fabs(err) <= 1e-13 || (hi - lo) <= 2.0 * kEps * x) return x;
    if (err > 0.0)
      hi = x;
    else
      lo = x;
    const double logpdf = (a - 1.0) * std::log(x) - x - gln;
    double xn = x - err * std::exp(-logpdf);
    if (!(xn > lo) || !(xn < hi) || !std::isfinite(xn))
      xn = std::isinf(hi) ? 2.0 * x : 0.5 * (lo + hi);
    x = xn;
  }
  throw ConvergenceError("inv_reg_gamma_p: Newton iteration cap reached", lo, hi);
}

double reg_inc_beta(double a, double b, double x) {
  require_positive(a, "reg_inc_beta: a");
  require_positive(b, "reg_inc_beta: b");
  if (!(x >= 0.0) || !(x <= 1.0))
    throw std::domain_error("reg_inc_beta: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double front =
      std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  if (x < a / (a + b)) return front * inc_beta_cf(a, b, x) / a;
  return 1.0 - front * inc_beta_cf(b, a, 1.0 - x) / b;
}

double inv_reg_inc_beta(double a, double b, double p) {
  require_positive(a, "inv_reg_inc_beta: a");
  require_positive(b, "inv_reg_inc_beta: b");
  require_probability(p, "inv_reg_inc_beta: p");

  const double lbeta = log_beta(a, b);
  double lo = 0.0;
  double hi = 1.0;
  double x = a / (a + b);
  for (int it = 0; it < 4 * kInverseMaxIter; ++it) {
    const double err = reg_inc_beta(a, b, x) - p;
    if (std::fabs(err) <= 1e-14 || (hi - lo) <= 2.0 * kEps * x) return x;
    if (err > 0.0)
      hi = x;
    else
      lo = x;
    const double logpdf =
        (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - lbeta;
    double xn = x - err * std::exp(-logpdf);
    if (!(xn > lo) || !(xn < hi) || !std::isfinite(xn)) xn = 0.5 * (lo + hi);
    x = xn;
  }
  throw ConvergenceError("inv_reg_inc_beta: iteration cap reached", lo, hi);
}

double student_t_quantile(double d, double p) {
  require_positive(d, "student_t_quantile: d");
  require_probability(p, "student_t_quantile: p");
  if (p == 0.5) return 0.0;
  if (p < 0.5) return -student_t_quantile(d, 1.0 - p);
  // For p > 1/2: 2(1 - p) = I_x(d/2, 1/2) with x = d / (d + t^2).
  const double x = inv_reg_inc_beta(0.5 * d, 0.5, 2.0 * (1.0 - p));
  return std::sqrt(d * (1.0 - x) / x);
}

double student_t_cdf(double d, double t) {
  require_positive(d, "student_t_cdf: d");
  const double ib = reg_inc_beta(0.5 * d, 0.5, d / (d + t * t));
  return t >= 0.0 ? 1.0 - 0.5 * ib : 0.5 * ib;
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double normal_quantile(double p) {
  require_probability(p, "normal_quantile: p");

  // Acklam's rational approximation (|rel err| < 1.2e-9), then one Halley
  // step against the erfc CDF.
  static constexpr double A[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double B[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double C[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double D[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5]) /
        ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q /
        (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5]) /
        ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
  }

  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace cimono::specfun
