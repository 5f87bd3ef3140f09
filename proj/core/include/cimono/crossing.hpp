#pragma once

#include "cimono/distributions.hpp"
#include "cimono/types.hpp"

namespace cimono::crossing {

/// A gamma pair with strictly ordered parameters a1 < a2, b1 > b2. Under
/// this ordering the log density ratio is strictly convex with a negative
/// minimum, so the densities cross exactly twice and the CDFs exactly once.
struct OrderedGammaPair {
  dist::GammaSpec first;
  dist::GammaSpec second;

  OrderedGammaPair(dist::GammaSpec f, dist::GammaSpec s) : first(f), second(s) {
    if (!(first.shape.value() < second.shape.value()) ||
        !(first.scale.value() > second.scale.value()))
      throw std::invalid_argument(
          "OrderedGammaPair: requires shape1 < shape2 and scale1 > scale2");
  }
};

struct DensityCrossings {
  double c1;
  double c2;
};

/// Everything about a pair's crossing: the density crossings, the unique
/// CDF crossing x*, the crossing probability alpha* = F1(x*) = F2(x*), and
/// the achieved residual |F1(x*) - F2(x*)|.
///
/// alpha_critical is the largest interval level complement for which the
/// two-sided quantile reversal holds: the order-u quantiles reverse at
/// u = alpha*, so an equal-tails interval at level 1-alpha keeps both of its
/// quantile orders alpha/2 and 1-alpha/2 on the correct sides of alpha*
/// exactly when alpha < 2 min(alpha*, 1-alpha*). For the mean-one pairs here
/// alpha* sits above 1/2 and drifts toward it as n grows, so alpha_critical
/// = 2(1 - alpha*) climbs toward 1 - the fast-growing threshold governing
/// when the mean interval length decreases in n.
struct CrossingReport {
  PositiveReal c1;
  PositiveReal c2;
  PositiveReal x_star;
  Probability alpha_star;
  Probability alpha_critical;  // 2 min(alpha*, 1 - alpha*)
  double residual;
};

/// Minimizer of the log density ratio r(x) = ln f1(x) - ln f2(x):
/// (a2 - a1) / (1/b2 - 1/b1).
double density_ratio_minimizer(const OrderedGammaPair& pair);

/// log f1(x) - log f2(x).
double log_density_ratio(const OrderedGammaPair& pair, double x);

/// F1(x) - F2(x), evaluated through the upper tails when both CDFs are
/// close to 1 so the difference keeps its digits.
double cdf_difference(const OrderedGammaPair& pair, double x);

/// The two roots c1 < c2 of the log density ratio, bracketed on either side
/// of its minimizer by geometric expansion and polished to |r| <= 1e-12.
/// Throws ConsistencyError if the ratio never goes negative (impossible
/// under the ordering, guarded anyway).
DensityCrossings density_crossings(const OrderedGammaPair& pair);

/// The unique root of F1 - F2, bracketed strictly inside (c1, c2) where the
/// sign change F1(c1) > F2(c1), F1(c2) < F2(c2) is guaranteed.
CrossingReport cdf_crossing(const OrderedGammaPair& pair);

/// Mean-one pair (na, 1/(na)) vs ((n+1)a, 1/((n+1)a)) behind the gamma-scale
/// interval comparison at sample sizes n and n+1.
OrderedGammaPair gamma_scale_pair(int n, double a);

/// Pair ((n-1)/2, 2/(n-1)) vs (n/2, 2/n): the laws of chi2_(n-1)/(n-1) and
/// chi2_n/n behind the normal-variance interval.
OrderedGammaPair normal_variance_pair(int n);

/// Critical level alpha*(n, a) for the gamma-scale interval.
Probability alpha_star_gamma_scale(int n, double a);

/// Critical level alpha*(n) for the normal-variance interval, n >= 2.
Probability alpha_star_normal_variance(int n);

}  // namespace cimono::crossing
