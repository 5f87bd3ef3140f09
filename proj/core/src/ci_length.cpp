#include "cimono/ci_length.hpp"

#include <cmath>
#include <string>

#include "cimono/crossing.hpp"
#include "cimono/gamma_bounds.hpp"
#include "cimono/specfun.hpp"

namespace cimono::ci {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error("alpha must lie in (0, 1), got " +
                            std::to_string(alpha));
}

void require_shape(double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::domain_error("shape must be finite and > 0");
}

void require_n(int n, int n_min, const char* what) {
  if (n < n_min)
    throw std::domain_error(std::string(what) + ": n must be >= " +
                            std::to_string(n_min) + ", got " + std::to_string(n));
}

}  // namespace

const char* family_name(const CiFamily& family) {
  return std::visit(
      [](const auto& f) -> const char* {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, GammaScaleFamily>) return "gamma-scale";
        if constexpr (std::is_same_v<T, NormalVarianceFamily>)
          return "normal-variance";
        if constexpr (std::is_same_v<T, NormalMeanFamily>) return "normal-mean";
        if constexpr (std::is_same_v<T, ParetoFamily>) return "pareto";
        if constexpr (std::is_same_v<T, UniformScaleFamily>) return "uniform";
      },
      family);
}

int family_min_n(const CiFamily& family) {
  return std::visit(
      [](const auto& f) -> int {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, GammaScaleFamily>) return 1;
        if constexpr (std::is_same_v<T, NormalVarianceFamily>) return 2;
        if constexpr (std::is_same_v<T, NormalMeanFamily>) return 2;
        if constexpr (std::is_same_v<T, ParetoFamily>) return 2;
        if constexpr (std::is_same_v<T, UniformScaleFamily>) return 1;
      },
      family);
}

Interval gamma_scale_interval(double mean_x, int n, double a, double alpha) {
  require_n(n, 1, "gamma_scale_interval");
  require_shape(a);
  require_alpha(alpha);
  if (!(mean_x > 0.0)) throw std::domain_error("gamma_scale_interval: mean_x <= 0");
  const double na = n * a;
  const double q_lo = specfun::inv_reg_gamma_p(na, 0.5 * alpha);
  const double q_hi = specfun::inv_reg_gamma_p(na, 1.0 - 0.5 * alpha);
  return {n * mean_x / q_hi, n * mean_x / q_lo};
}

double gamma_scale_mean_length(int n, double a, double alpha, double beta) {
  require_n(n, 1, "gamma_scale_mean_length");
  require_shape(a);
  require_alpha(alpha);
  const double na = n * a;
  return beta * (na / specfun::inv_reg_gamma_p(na, 0.5 * alpha) -
                 na / specfun::inv_reg_gamma_p(na, 1.0 - 0.5 * alpha));
}

double gamma_scale_mean_length_asymmetric(int n, double a, double alpha1,
                                          double alpha2, double beta) {
  require_n(n, 1, "gamma_scale_mean_length_asymmetric");
  require_shape(a);
  if (!(alpha1 > 0.0) || !(alpha2 > 0.0) || !(alpha1 + alpha2 < 1.0))
    throw std::domain_error(
        "gamma_scale_mean_length_asymmetric: need alpha1 > 0, alpha2 > 0, "
        "alpha1 + alpha2 < 1");
  const double na = n * a;
  return beta * (na / specfun::inv_reg_gamma_p(na, alpha1) -
                 na / specfun::inv_reg_gamma_p(na, 1.0 - alpha2));
}

double one_sided_lower_mean(int n, double a, double alpha, double beta) {
  require_n(n, 1, "one_sided_lower_mean");
  require_shape(a);
  require_alpha(alpha);
  const double na = n * a;
  return beta * na / specfun::inv_reg_gamma_p(na, 1.0 - alpha);
}

double one_sided_upper_mean(int n, double a, double alpha, double beta) {
  require_n(n, 1, "one_sided_upper_mean");
  require_shape(a);
  require_alpha(alpha);
  const double na = n * a;
  return beta * na / specfun::inv_reg_gamma_p(na, alpha);
}

double chi_square_quantile(int d, double p) {
  if (d < 1) throw std::domain_error("chi_square_quantile: d must be >= 1");
  return 2.0 * specfun::inv_reg_gamma_p(0.5 * d, p);
}

double normal_variance_mean_length(int n, double alpha, double sigma_sq) {
  require_n(n, 2, "normal_variance_mean_length");
  require_alpha(alpha);
  if (!(sigma_sq > 0.0))
    throw std::domain_error("normal_variance_mean_length: sigma_sq <= 0");
  const double d = n - 1;
  return sigma_sq * (d / chi_square_quantile(n - 1, 0.5 * alpha) -
                     d / chi_square_quantile(n - 1, 1.0 - 0.5 * alpha));
}

double normal_mean_mean_length(int n, double alpha, double sigma) {
  require_n(n, 2, "normal_mean_mean_length");
  require_alpha(alpha);
  if (!(sigma > 0.0)) throw std::domain_error("normal_mean_mean_length: sigma <= 0");
  const double t = specfun::student_t_quantile(n - 1, 1.0 - 0.5 * alpha);
  return 2.0 * std::sqrt(2.0) * sigma * t * bounds::e_n(n);
}

Interval pareto_interval(double s_n, int n, double alpha) {
  require_n(n, 1, "pareto_interval");
  require_alpha(alpha);
  if (!(s_n > 0.0)) throw std::domain_error("pareto_interval: s_n <= 0");
  return {1.0 + specfun::inv_reg_gamma_p(n, 0.5 * alpha) / s_n,
          1.0 + specfun::inv_reg_gamma_p(n, 1.0 - 0.5 * alpha) / s_n};
}

double pareto_mean_length(int n, double alpha, double theta) {
  if (n == 1)
    throw std::domain_error(
        "pareto_mean_length: E(1/S_1) diverges, mean length is infinite at n = 1");
  require_n(n, 2, "pareto_mean_length");
  require_alpha(alpha);
  if (!(theta > 1.0)) throw std::domain_error("pareto_mean_length: theta <= 1");
  const double spread = specfun::inv_reg_gamma_p(n, 1.0 - 0.5 * alpha) -
                        specfun::inv_reg_gamma_p(n, 0.5 * alpha);
  return (theta - 1.0) * spread / (n - 1);
}

Interval uniform_interval(double m_n, int n, double alpha) {
  require_n(n, 1, "uniform_interval");
  require_alpha(alpha);
  if (!(m_n > 0.0)) throw std::domain_error("uniform_interval: m_n <= 0");
  return {m_n, m_n * std::pow(alpha, -1.0 / n)};
}

double uniform_mean_length(int n, double alpha, double theta) {
  require_n(n, 1, "uniform_mean_length");
  require_alpha(alpha);
  if (!(theta > 0.0)) throw std::domain_error("uniform_mean_length: theta <= 0");
  return n / (n + 1.0) * theta * (std::pow(alpha, -1.0 / n) - 1.0);
}

double mean_length(const CiFamily& family, int n, double alpha) {
  return std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, GammaScaleFamily>)
          return gamma_scale_mean_length(n, f.shape, alpha, f.scale);
        if constexpr (std::is_same_v<T, NormalVarianceFamily>)
          return normal_variance_mean_length(n, alpha, f.variance);
        if constexpr (std::is_same_v<T, NormalMeanFamily>)
          return normal_mean_mean_length(n, alpha, f.sigma);
        if constexpr (std::is_same_v<T, ParetoFamily>)
          return pareto_mean_length(n, alpha, f.theta);
        if constexpr (std::is_same_v<T, UniformScaleFamily>)
          return uniform_mean_length(n, alpha, f.theta);
      },
      family);
}

LengthCurve monotonicity_scan(const CiFamily& family, double alpha, int n_min,
                              int n_max) {
  require_alpha(alpha);
  if (n_min < family_min_n(family))
    throw std::domain_error(std::string("monotonicity_scan: ") +
                            family_name(family) + " requires n >= " +
                            std::to_string(family_min_n(family)));
  if (n_max < n_min)
    throw std::domain_error("monotonicity_scan: n_max must be >= n_min");

  LengthCurve curve{family, Probability(alpha), {}, true};
  curve.records.reserve(n_max - n_min + 1);
  for (int n = n_min; n <= n_max; ++n) {
    LengthRecord rec{n, 0.0, std::nullopt, std::nullopt, std::nullopt};
    try {
      rec.length = mean_length(family, n, alpha);
      std::optional<crossing::CrossingReport> report;
      if (const auto* gs = std::get_if<GammaScaleFamily>(&family))
        report = crossing::cdf_crossing(crossing::gamma_scale_pair(n, gs->shape));
      else if (std::holds_alternative<NormalVarianceFamily>(family))
        report = crossing::cdf_crossing(crossing::normal_variance_pair(n));
      if (report) {
        rec.alpha_star = report->alpha_star;
        rec.alpha_critical = report->alpha_critical;
        rec.below_alpha_star = alpha < report->alpha_critical.value();
      }
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("monotonicity_scan at n = " + std::to_string(n) +
                                 ": " + e.what(),
                             e.bracket_lo(), e.bracket_hi());
    }
    curve.records.push_back(rec);
  }
  for (std::size_t i = 1; i < curve.records.size(); ++i)
    if (!(curve.records[i].length < curve.records[i - 1].length)) {
      curve.monotone_decreasing = false;
      break;
    }
  return curve;
}

}  // namespace cimono::ci
