#include "cimono/monte_carlo.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <vector>

#include "cimono/distributions.hpp"
#include "cimono/specfun.hpp"

namespace cimono::mc {

namespace {

int min_simulation_n(const ci::CiFamily& family) {
  // The Pareto interval exists from n = 1 (only its mean length diverges
  // there); the two normal families need n >= 2 for a sample variance.
  if (std::holds_alternative<ci::NormalVarianceFamily>(family) ||
      std::holds_alternative<ci::NormalMeanFamily>(family))
    return 2;
  return 1;
}

// Quantiles and scale factors are loop invariants; each plan closure runs
// one replication with the interval formulas of ci_length.
std::function<RepOutcome(Xoshiro256pp&)> make_rep_plan(const ci::CiFamily& family,
                                                       int n, double alpha) {
  using specfun::inv_reg_gamma_p;

  if (const auto* f = std::get_if<ci::GammaScaleFamily>(&family)) {
    const double a = f->shape, beta = f->scale;
    const double na = n * a;
    const double inv_q_lo = 1.0 / inv_reg_gamma_p(na, 0.5 * alpha);
    const double inv_q_hi = 1.0 / inv_reg_gamma_p(na, 1.0 - 0.5 * alpha);
    return [=](Xoshiro256pp& rng) -> RepOutcome {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += dist::sample_gamma(a, beta, rng);
      const double lo = sum * inv_q_hi;
      const double hi = sum * inv_q_lo;
      return {lo < beta && beta < hi, hi - lo};
    };
  }

  if (const auto* f = std::get_if<ci::NormalVarianceFamily>(&family)) {
    const double mu = f->mean, sigma_sq = f->variance;
    const double sd = std::sqrt(sigma_sq);
    const double d = n - 1;
    const double inv_chi_lo = d / ci::chi_square_quantile(n - 1, 1.0 - 0.5 * alpha);
    const double inv_chi_hi = d / ci::chi_square_quantile(n - 1, 0.5 * alpha);
    auto buf = std::make_shared<std::vector<double>>(n);
    return [=](Xoshiro256pp& rng) -> RepOutcome {
      double mean = 0.0;
      for (int i = 0; i < n; ++i) {
        (*buf)[i] = dist::sample_normal(mu, sd, rng);
        mean += (*buf)[i];
      }
      mean /= n;
      double ss = 0.0;
      for (int i = 0; i < n; ++i) {
        const double dev = (*buf)[i] - mean;
        ss += dev * dev;
      }
      const double s2 = ss / d;
      const double lo = s2 * inv_chi_lo;
      const double hi = s2 * inv_chi_hi;
      return {lo < sigma_sq && sigma_sq < hi, hi - lo};
    };
  }

  if (const auto* f = std::get_if<ci::NormalMeanFamily>(&family)) {
    const double mu = f->mean, sigma = f->sigma;
    const double t = specfun::student_t_quantile(n - 1, 1.0 - 0.5 * alpha);
    const double half_width_factor = t / std::sqrt(static_cast<double>(n));
    auto buf = std::make_shared<std::vector<double>>(n);
    return [=](Xoshiro256pp& rng) -> RepOutcome {
      double mean = 0.0;
      for (int i = 0; i < n; ++i) {
        (*buf)[i] = dist::sample_normal(mu, sigma, rng);
        mean += (*buf)[i];
      }
      mean /= n;
      double ss = 0.0;
      for (int i = 0; i < n; ++i) {
        const double dev = (*buf)[i] - mean;
        ss += dev * dev;
      }
      const double half = half_width_factor * std::sqrt(ss / (n - 1));
      return {mean - half < mu && mu < mean + half, 2.0 * half};
    };
  }

  if (const auto* f = std::get_if<ci::ParetoFamily>(&family)) {
    const double theta = f->theta;
    const double q_lo = inv_reg_gamma_p(n, 0.5 * alpha);
    const double q_hi = inv_reg_gamma_p(n, 1.0 - 0.5 * alpha);
    return [=](Xoshiro256pp& rng) -> RepOutcome {
      const double s = dist::pareto_log_sum(n, theta, rng);
      const double lo = 1.0 + q_lo / s;
      const double hi = 1.0 + q_hi / s;
      return {lo < theta && theta < hi, (q_hi - q_lo) / s};
    };
  }

  const auto& f = std::get<ci::UniformScaleFamily>(family);
  const double theta = f.theta;
  const double inv_root = std::pow(alpha, -1.0 / n);
  return [=](Xoshiro256pp& rng) -> RepOutcome {
    double m = 0.0;
    for (int i = 0; i < n; ++i) m = std::max(m, theta * rng.uniform01());
    const double hi = m * inv_root;
    return {m < theta && theta < hi, hi - m};
  };
}

}  // namespace

McReport simulate(const McConfig& config) {
  if (config.n < min_simulation_n(config.family))
    throw std::domain_error(std::string("simulate: ") +
                            ci::family_name(config.family) + " requires n >= " +
                            std::to_string(min_simulation_n(config.family)));
  auto rep = make_rep_plan(config.family, config.n, config.alpha);
  return run_replications(config.replications, config.seed,
                          static_cast<std::uint64_t>(config.n), rep);
}

std::vector<McReport> coverage_curve(const ci::CiFamily& family, double alpha,
                                     const std::vector<int>& n_list,
                                     int replications, std::uint64_t master_seed) {
  std::vector<McReport> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    McConfig cfg{family, n, Probability(alpha), replications,
                 derive_stream_seed(master_seed, static_cast<std::uint64_t>(n))};
    out.push_back(simulate(cfg));
  }
  return out;
}

}  // namespace cimono::mc
