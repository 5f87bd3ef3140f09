#include "cimono/nef.hpp"

#include <cmath>
#include <limits>

#include "cimono/distributions.hpp"
#include "cimono/specfun.hpp"

namespace cimono::nef {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_theta(const NefModel& model, double theta) {
  if (!(theta > model.theta_min) || !(theta < model.theta_max))
    throw std::domain_error("theta = " + std::to_string(theta) +
                            " outside the open parameter interval of " +
                            model.name);
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error("alpha must lie in (0, 1)");
}

// Next probe moving from x toward an (open, possibly infinite) endpoint:
// geometric steps to an infinite end, gap halving to a finite one.
double step_toward(double x, double end, double& step) {
  if (std::isinf(end)) {
    const double next = x + (end > 0 ? step : -step);
    step *= 2.0;
    return next;
  }
  return x + 0.5 * (end - x);
}

}  // namespace

NefModel gaussian_generator() {
  NefModel m;
  m.name = "gaussian";
  m.theta_min = -kInf;
  m.theta_max = kInf;
  m.theta_start = 0.0;
  m.delta_increasing_in_theta = true;
  m.cumulant = [](double theta) { return 0.5 * theta * theta; };
  m.delta = [](int n, double alpha, double theta) {
    return n * theta + std::sqrt(static_cast<double>(n)) *
                           specfun::normal_quantile(alpha);
  };
  m.delta_inverse = [](int n, double alpha, double t) {
    return (t - std::sqrt(static_cast<double>(n)) *
                    specfun::normal_quantile(alpha)) /
           n;
  };
  m.mean_length_closed = [](int n, double alpha, double) {
    return 2.0 * specfun::normal_quantile(1.0 - 0.5 * alpha) /
           std::sqrt(static_cast<double>(n));
  };
  m.sample = [](double theta, Xoshiro256pp& rng) {
    return dist::sample_normal(theta, 1.0, rng);
  };
  return m;
}

NefModel exponential_generator() {
  NefModel m;
  m.name = "exponential";
  m.theta_min = -kInf;
  m.theta_max = 1.0;
  m.theta_start = 0.0;
  m.delta_increasing_in_theta = true;
  m.cumulant = [](double theta) { return -std::log1p(-theta); };
  m.delta = [](int n, double alpha, double theta) {
    return specfun::inv_reg_gamma_p(n, alpha) / (1.0 - theta);
  };
  m.delta_inverse = [](int n, double alpha, double t) {
    return 1.0 - specfun::inv_reg_gamma_p(n, alpha) / t;
  };
  m.mean_length_closed = [](int n, double alpha, double theta) {
    if (n < 2) return kInf;  // E(1/T_1) diverges
    const double spread = specfun::inv_reg_gamma_p(n, 1.0 - 0.5 * alpha) -
                          specfun::inv_reg_gamma_p(n, 0.5 * alpha);
    return (1.0 - theta) * spread / (n - 1);
  };
  m.sample = [](double theta, Xoshiro256pp& rng) {
    return -std::log(1.0 - rng.uniform01()) / (1.0 - theta);
  };
  return m;
}

double delta_quantile(const NefModel& model, int n, double alpha, double theta) {
  if (n < 1) throw std::domain_error("delta_quantile: n must be >= 1");
  require_alpha(alpha);
  require_theta(model, theta);
  return model.delta(n, alpha, theta);
}

double invert_delta_numeric(const NefModel& model, int n, double alpha, double t) {
  if (n < 1) throw std::domain_error("invert_delta_numeric: n must be >= 1");
  require_alpha(alpha);
  const double dir = model.delta_increasing_in_theta ? 1.0 : -1.0;
  const auto g = [&](double theta) {
    return dir * (model.delta(n, alpha, theta) - t);
  };

  // Expand a sign-changing bracket out of theta_start. g is increasing.
  double lo = model.theta_start;
  double hi = model.theta_start;
  double g_start = g(lo);
  if (g_start == 0.0) return lo;
  if (g_start < 0.0) {
    double probe = hi, step = std::max(1.0, std::fabs(hi));
    for (int k = 0;; ++k) {
      if (k >= 200) {
        const double d_anchor = model.delta(n, alpha, model.theta_start);
        const double d_far = model.delta(n, alpha, probe);
        throw RangeError("invert_delta: t outside attainable range of " +
                             model.name,
                         std::min(d_anchor, d_far), std::max(d_anchor, d_far));
      }
      const double next = step_toward(probe, model.theta_max, step);
      if (!(next > probe) || !(next < model.theta_max)) continue;
      probe = next;
      if (g(probe) >= 0.0) {
        hi = probe;
        break;
      }
      lo = probe;
    }
  } else {
    double probe = lo, step = std::max(1.0, std::fabs(lo));
    for (int k = 0;; ++k) {
      if (k >= 200) {
        const double d_anchor = model.delta(n, alpha, model.theta_start);
        const double d_far = model.delta(n, alpha, probe);
        throw RangeError("invert_delta: t outside attainable range of " +
                             model.name,
                         std::min(d_anchor, d_far), std::max(d_anchor, d_far));
      }
      const double next = step_toward(probe, model.theta_min, step);
      if (!(next < probe) || !(next > model.theta_min)) continue;
      probe = next;
      if (g(probe) <= 0.0) {
        lo = probe;
        break;
      }
      hi = probe;
    }
  }

  const double tol = 1e-10 * std::max(1.0, std::fabs(t));
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 300; ++it) {
    mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (std::fabs(gm) <= tol &&
        (hi - lo) <= 1e-12 * std::max(1.0, std::fabs(mid)))
      return mid;
    if (gm < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return mid;
}

double invert_delta(const NefModel& model, int n, double alpha, double t) {
  if (model.delta_inverse) {
    if (n < 1) throw std::domain_error("invert_delta: n must be >= 1");
    require_alpha(alpha);
    const double theta = model.delta_inverse(n, alpha, t);
    if (theta > model.theta_min && theta < model.theta_max) return theta;
    // Unattainable t: let the prober throw with the delta range it saw.
  }
  return invert_delta_numeric(model, n, alpha, t);
}

ci::Interval nef_interval(const NefModel& model, int n, double alpha, double t) {
  const double at_high_order = invert_delta(model, n, 1.0 - 0.5 * alpha, t);
  const double at_low_order = invert_delta(model, n, 0.5 * alpha, t);
  const ci::Interval iv = model.delta_increasing_in_theta
                              ? ci::Interval{at_high_order, at_low_order}
                              : ci::Interval{at_low_order, at_high_order};
  if (!(iv.lo < iv.hi))
    throw ConsistencyError("nef_interval: endpoints failed to order");
  return iv;
}

mc::McReport nef_coverage(const NefModel& model, double theta, int n, double alpha,
                          int replications, std::uint64_t seed) {
  require_theta(model, theta);
  require_alpha(alpha);
  if (n < 1) throw std::domain_error("nef_coverage: n must be >= 1");
  return mc::run_replications(
      replications, seed, static_cast<std::uint64_t>(n),
      [&](Xoshiro256pp& rng) -> mc::RepOutcome {
        double t_n = 0.0;
        for (int i = 0; i < n; ++i) t_n += model.sample(theta, rng);
        const ci::Interval iv = nef_interval(model, n, alpha, t_n);
        return {iv.lo < theta && theta < iv.hi, iv.hi - iv.lo};
      });
}

NefLengthCurve mean_length_scan(const NefModel& model, double theta, double alpha,
                                int n_min, int n_max, int replications,
                                std::uint64_t seed) {
  require_theta(model, theta);
  require_alpha(alpha);
  if (n_min < 1 || n_max < n_min)
    throw std::domain_error("mean_length_scan: need 1 <= n_min <= n_max");

  NefLengthCurve curve{model.name, theta, Probability(alpha), {}, true};
  curve.records.reserve(n_max - n_min + 1);
  for (int n = n_min; n <= n_max; ++n) {
    const mc::McReport rep = nef_coverage(model, theta, n, alpha, replications,
                                          derive_stream_seed(seed, n));
    NefScanRecord rec{n, rep.mean_length_hat, rep.se_length, std::nullopt};
    if (model.mean_length_closed) {
      const double cf = model.mean_length_closed(n, alpha, theta);
      if (std::isfinite(cf)) rec.closed_form = cf;
    }
    curve.records.push_back(rec);
  }
  for (std::size_t i = 1; i < curve.records.size(); ++i)
    if (!(curve.records[i].mean_length < curve.records[i - 1].mean_length)) {
      curve.monotone_decreasing = false;
      break;
    }
  return curve;
}

}  // namespace cimono::nef
