#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cimono/types.hpp"

namespace cimono::ci {

struct Interval {
  double lo;
  double hi;
};

/// The five interval families. Each carries the true parameters needed to
/// scale its mean length (and, for simulation, to generate data).
struct GammaScaleFamily {
  PositiveReal shape;  // known shape a
  PositiveReal scale;  // true scale beta
  GammaScaleFamily(double a, double beta) : shape(a), scale(beta) {}
};

struct NormalVarianceFamily {
  double mean;
  PositiveReal variance;
  NormalVarianceFamily(double mu, double sigma_sq) : mean(mu), variance(sigma_sq) {}
};

struct NormalMeanFamily {
  double mean;
  PositiveReal sigma;
  NormalMeanFamily(double mu, double sd) : mean(mu), sigma(sd) {}
};

struct ParetoFamily {
  double theta;
  explicit ParetoFamily(double t) : theta(t) {
    if (!(t > 1.0) || !std::isfinite(t))
      throw std::domain_error("ParetoFamily: theta must be finite and > 1");
  }
};

struct UniformScaleFamily {
  PositiveReal theta;
  explicit UniformScaleFamily(double t) : theta(t) {}
};

using CiFamily = std::variant<GammaScaleFamily, NormalVarianceFamily,
                              NormalMeanFamily, ParetoFamily, UniformScaleFamily>;

const char* family_name(const CiFamily& family);

/// Smallest sample size the family's interval is defined for.
int family_min_n(const CiFamily& family);

// --- gamma scale (known shape a) -----------------------------------------

/// (n xbar / g_{na;1-a/2}, n xbar / g_{na;a/2}) with g the Gamma(na, 1)
/// quantile.
Interval gamma_scale_interval(double mean_x, int n, double a, double alpha);

/// L_n = beta (na/g_{na;a/2} - na/g_{na;1-a/2}).
double gamma_scale_mean_length(int n, double a, double alpha, double beta);

/// Asymmetric split alpha1 + alpha2 = alpha:
/// beta na (1/g_{na;alpha1} - 1/g_{na;1-alpha2}).
double gamma_scale_mean_length_asymmetric(int n, double a, double alpha1,
                                          double alpha2, double beta);

/// Expectation of the one-sided lower bound n xbar / g_{na;1-alpha}.
double one_sided_lower_mean(int n, double a, double alpha, double beta);

/// Expectation of the one-sided upper bound n xbar / g_{na;alpha}.
double one_sided_upper_mean(int n, double a, double alpha, double beta);

// --- normal variance / mean ----------------------------------------------

/// Order-p quantile of chi-square with d degrees of freedom.
double chi_square_quantile(int d, double p);

/// L_n = sigma^2 ((n-1)/chi2_{n-1;a/2} - (n-1)/chi2_{n-1;1-a/2}).
double normal_variance_mean_length(int n, double alpha, double sigma_sq);

/// L_n = 2 sqrt(2) sigma t_{n-1;1-a/2} E_n.
double normal_mean_mean_length(int n, double alpha, double sigma);

// --- Pareto / uniform scale ----------------------------------------------

/// (1 + g_{n;a/2}/s_n, 1 + g_{n;1-a/2}/s_n) from S_n = sum log X_i.
Interval pareto_interval(double s_n, int n, double alpha);

/// L_n = (theta-1)(g_{n;1-a/2} - g_{n;a/2})/(n-1); infinite at n = 1, which
/// is rejected as a domain error.
double pareto_mean_length(int n, double alpha, double theta);

/// (M_n, M_n / alpha^(1/n)).
Interval uniform_interval(double m_n, int n, double alpha);

/// L_n = (n/(n+1)) theta (alpha^(-1/n) - 1).
double uniform_mean_length(int n, double alpha, double theta);

/// Mean length of any family at sample size n.
double mean_length(const CiFamily& family, int n, double alpha);

// --- scans -----------------------------------------------------------------

struct LengthRecord {
  int n;
  double length;
  /// Crossing probability alpha*(n, .) and the critical level
  /// 2 min(alpha*, 1-alpha*), filled where the crossing argument applies
  /// (gamma scale, normal variance).
  std::optional<double> alpha_star;
  std::optional<double> alpha_critical;
  /// alpha below the critical level, i.e. the n -> n+1 decrease is covered
  /// by the quantile-reversal hypothesis.
  std::optional<bool> below_alpha_star;
};

struct LengthCurve {
  CiFamily family;
  Probability alpha;
  std::vector<LengthRecord> records;  // sorted by n
  bool monotone_decreasing;           // literal pairwise L_{n+1} < L_n
};

/// Evaluate L_n over [n_min, n_max]. For the two gamma-pair families each
/// record is annotated with alpha*(n, .) so rows outside the reversal
/// hypothesis are distinguishable; the scan records, it does not judge.
LengthCurve monotonicity_scan(const CiFamily& family, double alpha, int n_min,
                              int n_max);

}  // namespace cimono::ci
