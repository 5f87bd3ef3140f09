#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cimono/ci_length.hpp"
#include "cimono/monte_carlo.hpp"
#include "cimono/rng.hpp"
#include "cimono/types.hpp"

namespace cimono::nef {

/// A continuous natural exponential family dF(x; theta) = e^(theta x -
/// psi(theta)) dF(x), described through the pieces the interval construction
/// actually needs: the quantile map delta(n, alpha, theta) of the sufficient
/// statistic T_n = sum X_i (strictly monotone in theta on the open parameter
/// interval), a sampler for X under theta, and optional closed forms.
/// psi is carried for the built-ins where it is known; custom generators
/// must supply delta directly with a strictly monotone theta map.
struct NefModel {
  std::string name;
  double theta_min;  // open interval ends; +-infinity allowed
  double theta_max;
  double theta_start;             // interior point to start bracketing from
  bool delta_increasing_in_theta;
  std::function<double(double)> cumulant;  // psi(theta); may be empty
  std::function<double(int, double, double)> delta;  // (n, alpha, theta)
  /// Closed inverse of theta -> delta(n, alpha, theta), if known: (n, alpha, t).
  std::function<double(int, double, double)> delta_inverse;
  /// Closed-form mean interval length (n, alpha, theta); may return a
  /// non-finite value where undefined. Empty when unknown.
  std::function<double(int, double, double)> mean_length_closed;
  std::function<double(double, Xoshiro256pp&)> sample;  // one X_i under theta
};

/// Generator F = standard normal: X ~ N(theta, 1), T_n ~ N(n theta, n),
/// psi(theta) = theta^2 / 2, Theta = R.
NefModel gaussian_generator();

/// Generator F = standard exponential: X ~ Exp(1 - theta) for theta < 1,
/// T_n ~ Gamma(n, 1/(1-theta)), psi(theta) = -ln(1 - theta).
NefModel exponential_generator();

/// delta_{n;alpha}(theta): order-alpha quantile of T_n under theta.
double delta_quantile(const NefModel& model, int n, double alpha, double theta);

/// Solve delta(n, alpha, theta) = t for theta. Uses the model's closed-form
/// inverse when present, the bracketing solver otherwise. Throws RangeError
/// (carrying the attainable delta range probed) when t cannot be reached.
double invert_delta(const NefModel& model, int n, double alpha, double t);

/// The bracketing/bisection path, regardless of closed forms: geometric
/// expansion from theta_start toward the open ends of Theta, then bisection
/// to |delta - t| <= 1e-10 max(1, |t|).
double invert_delta_numeric(const NefModel& model, int n, double alpha, double t);

/// Level-(1-alpha) interval for theta from an observed T_n = t:
/// the inverses at orders 1-alpha/2 and alpha/2, ordered by the direction of
/// delta's monotonicity so that lo < hi.
ci::Interval nef_interval(const NefModel& model, int n, double alpha, double t);

/// Empirical coverage/length of the interval at a true theta.
mc::McReport nef_coverage(const NefModel& model, double theta, int n,
                          double alpha, int replications, std::uint64_t seed);

struct NefScanRecord {
  int n;
  double mean_length;  // Monte Carlo estimate
  double se;
  std::optional<double> closed_form;
};

struct NefLengthCurve {
  std::string generator;
  double theta;
  Probability alpha;
  std::vector<NefScanRecord> records;
  /// Pairwise decrease of the Monte Carlo estimates. Reported as evidence
  /// only; whether it must hold for every generator is open.
  bool monotone_decreasing;
};

/// Mean interval length per n over [n_min, n_max], estimated by Monte Carlo
/// with per-n streams derived from (seed, n); the closed form rides along
/// where the model provides one.
NefLengthCurve mean_length_scan(const NefModel& model, double theta, double alpha,
                                int n_min, int n_max, int replications,
                                std::uint64_t seed);

}  // namespace cimono::nef
