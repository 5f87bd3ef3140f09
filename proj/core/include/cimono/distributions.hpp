#pragma once

#include <variant>

#include "cimono/rng.hpp"
#include "cimono/types.hpp"

namespace cimono::dist {

/// Shape/scale pair of a gamma law: density x^(a-1) e^(-x/b) / (b^a Gamma(a)).
struct GammaSpec {
  PositiveReal shape;
  PositiveReal scale;

  GammaSpec(double a, double b) : shape(a), scale(b) {}
  double mean() const noexcept { return shape.value() * scale.value(); }
};

struct ChiSquare {
  int dof;
  explicit ChiSquare(int d) : dof(d) {
    if (d < 1) throw std::domain_error("ChiSquare: dof must be >= 1");
  }
};

struct StudentT {
  int dof;
  explicit StudentT(int d) : dof(d) {
    if (d < 1) throw std::domain_error("StudentT: dof must be >= 1");
  }
};

struct Normal {
  double mean;
  PositiveReal variance;
  Normal(double mu, double sigma_sq) : mean(mu), variance(sigma_sq) {}
  double sd() const noexcept { return std::sqrt(variance.value()); }
};

struct UniformScale {
  PositiveReal theta;  // U(0, theta)
  explicit UniformScale(double t) : theta(t) {}
};

struct Pareto {
  double theta;  // density (theta - 1) / x^theta on x >= 1
  explicit Pareto(double t) : theta(t) {
    if (!(t > 1.0) || !std::isfinite(t))
      throw std::domain_error("Pareto: theta must be finite and > 1");
  }
};

using DistributionModel =
    std::variant<GammaSpec, ChiSquare, StudentT, Normal, UniformScale, Pareto>;

/// CDF of Gamma(a, b) at x: P(a, x/b).
double gamma_cdf(const GammaSpec& spec, double x);

/// Order-p quantile of Gamma(a, b): b * inv_reg_gamma_p(a, p).
double gamma_quantile(const GammaSpec& spec, double p);

/// Law of X/d for X ~ chi-square with d degrees of freedom: Gamma(d/2, 2/d).
/// Its mean is exactly 1 for every d.
GammaSpec chi_square_as_scaled_gamma(int d);

/// CDF of any model (used by goodness-of-fit checks).
double cdf(const DistributionModel& model, double x);

/// One variate. Gamma uses the Marsaglia-Tsang squeeze (with the power boost
/// for shape < 1 and the inverse-CDF shortcut at shape == 1), normal the
/// Box-Muller transform, uniform and Pareto the inverse transform. The draw
/// is a pure function of the generator state sequence.
double sample(const DistributionModel& model, Xoshiro256pp& rng);

double sample_gamma(double shape, double scale, Xoshiro256pp& rng);
double sample_normal(double mean, double sd, Xoshiro256pp& rng);

/// Sufficient statistic S_n = sum log X_i of a Pareto(theta) sample of size
/// n, drawn as the sum of n Exp(theta - 1) variates.
double pareto_log_sum(int n, double theta, Xoshiro256pp& rng);

}  // namespace cimono::dist
