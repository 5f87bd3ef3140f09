#pragma once

#include "cimono/types.hpp"

namespace cimono::bounds {

/// Gamma(x+1) / Gamma(x+1/2), evaluated in log space.
double gamma_ratio(double x);

/// The two-sided bound sqrt(x + 1/4) < Gamma(x+1)/Gamma(x+1/2) < sqrt(x + 1/2)
/// evaluated at one point, with both margins.
struct GammaRatioBoundCheck {
  double x;
  double lower;   // sqrt(x + 1/4)
  double ratio;   // Gamma(x+1)/Gamma(x+1/2)
  double upper;   // sqrt(x + 1/2)
  bool holds;     // lower < ratio < upper, strictly
  double lower_margin;  // ratio - lower
  double upper_margin;  // upper - ratio
};

GammaRatioBoundCheck gamma_ratio_bound_check(double x);

/// E_n = Gamma(n/2) / (Gamma((n-1)/2) sqrt(n(n-1))): the factor turning the
/// Student quantile into the mean interval length. Log-space evaluation so
/// large n never overflows.
double e_n(int n);

/// The analytic separation argument for E_n > E_(n+1): lower-bound E_n by
/// sqrt((n-2)/2 + 1/4) / sqrt(n(n-1)) and upper-bound E_(n+1) by
/// sqrt((n-1)/2 + 1/2) / sqrt(n(n+1)). Separation holds for n > 3.
struct EnBoundComparison {
  int n;
  double lower_bound_en;    // lower bound for E_n
  double upper_bound_en1;   // upper bound for E_(n+1)
  bool separated;           // lower_bound_en > upper_bound_en1, strictly
};

EnBoundComparison e_n_bound_comparison(int n);

}  // namespace cimono::bounds
