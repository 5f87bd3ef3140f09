#include "cimono/distributions.hpp"

#include <cmath>
#include <numbers>

#include "cimono/specfun.hpp"

namespace cimono::dist {

double gamma_cdf(const GammaSpec& spec, double x) {
  if (!(x >= 0.0)) throw std::domain_error("gamma_cdf: x must be >= 0");
  return specfun::reg_gamma_p(spec.shape, x / spec.scale);
}

double gamma_quantile(const GammaSpec& spec, double p) {
  return spec.scale * specfun::inv_reg_gamma_p(spec.shape, p);
}

GammaSpec chi_square_as_scaled_gamma(int d) {
  if (d < 1) throw std::domain_error("chi_square_as_scaled_gamma: d must be >= 1");
  return GammaSpec(0.5 * d, 2.0 / d);
}

double cdf(const DistributionModel& model, double x) {
  return std::visit(
      [x](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GammaSpec>) {
          return x <= 0.0 ? 0.0 : gamma_cdf(m, x);
        } else if constexpr (std::is_same_v<T, ChiSquare>) {
          return x <= 0.0 ? 0.0 : specfun::reg_gamma_p(0.5 * m.dof, 0.5 * x);
        } else if constexpr (std::is_same_v<T, StudentT>) {
          return specfun::student_t_cdf(m.dof, x);
        } else if constexpr (std::is_same_v<T, Normal>) {
          return specfun::normal_cdf((x - m.mean) / m.sd());
        } else if constexpr (std::is_same_v<T, UniformScale>) {
          if (x <= 0.0) return 0.0;
          if (x >= m.theta) return 1.0;
          return x / m.theta;
        } else {
          static_assert(std::is_same_v<T, Pareto>);
          return x <= 1.0 ? 0.0 : 1.0 - std::pow(x, 1.0 - m.theta);
        }
      },
      model);
}

double sample_normal(double mean, double sd, Xoshiro256pp& rng) {
  const double u1 = rng.uniform01();
  const double u2 = rng.uniform01();
  const double z =
      std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  return mean + sd * z;
}

double sample_gamma(double shape, double scale, Xoshiro256pp& rng) {
  if (shape == 1.0) return -scale * std::log(1.0 - rng.uniform01());
  if (shape < 1.0) {
    // Boost: X_a = X_(a+1) * U^(1/a).
    const double boost = std::pow(rng.uniform01(), 1.0 / shape);
    return sample_gamma(shape + 1.0, scale, rng) * boost;
  }
  // Marsaglia-Tsang squeeze for shape > 1.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = sample_normal(0.0, 1.0, rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform01();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return scale * d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return scale * d * v;
  }
}

double pareto_log_sum(int n, double theta, Xoshiro256pp& rng) {
  if (n < 1) throw std::domain_error("pareto_log_sum: n must be >= 1");
  if (!(theta > 1.0) || !std::isfinite(theta))
    throw std::domain_error("pareto_log_sum: theta must be finite and > 1");
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    s += -std::log(1.0 - rng.uniform01()) / (theta - 1.0);
  return s;
}

double sample(const DistributionModel& model, Xoshiro256pp& rng) {
  return std::visit(
      [&rng](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GammaSpec>) {
          return sample_gamma(m.shape, m.scale, rng);
        } else if constexpr (std::is_same_v<T, ChiSquare>) {
          return sample_gamma(0.5 * m.dof, 2.0, rng);
        } else if constexpr (std::is_same_v<T, StudentT>) {
          const double z = sample_normal(0.0, 1.0, rng);
          const double g = sample_gamma(0.5 * m.dof, 2.0, rng);
          return z / std::sqrt(g / m.dof);
        } else if constexpr (std::is_same_v<T, Normal>) {
          return sample_normal(m.mean, m.sd(), rng);
        } else if constexpr (std::is_same_v<T, UniformScale>) {
          return m.theta * rng.uniform01();
        } else {
          static_assert(std::is_same_v<T, Pareto>);
          return std::pow(1.0 - rng.uniform01(), -1.0 / (m.theta - 1.0));
        }
      },
      model);
}

}  // namespace cimono::dist
