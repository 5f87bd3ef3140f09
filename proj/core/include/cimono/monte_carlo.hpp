#pragma once

#include <algorithm>
#include <cstdint>

#include "cimono/ci_length.hpp"
#include "cimono/rng.hpp"
#include "cimono/types.hpp"

namespace cimono::mc {

struct McConfig {
  ci::CiFamily family;
  int n;
  Probability alpha;
  int replications;
  std::uint64_t seed;
};

struct McReport {
  double coverage_hat;
  double mean_length_hat;
  double se_coverage;  // sqrt(p(1-p)/R)
  double se_length;    // sample sd of lengths / sqrt(R); 0 when R = 1
  int replications_used;

  bool operator==(const McReport&) const = default;
};

struct RepOutcome {
  bool covered;
  double length;
};

/// Replications are grouped in fixed blocks of 4096; block b of a run draws
/// from Xoshiro256pp(derive_stream_seed(seed, stream_tag, b)). Blocks are
/// independent streams, so a partitioned/parallel runner reproduces the
/// sequential results sum-for-sum.
inline constexpr int kReplicationBlock = 4096;

template <class Fn>
McReport run_replications(int replications, std::uint64_t seed,
                          std::uint64_t stream_tag, Fn&& rep) {
  if (replications < 1)
    throw std::domain_error("run_replications: need at least one replication");

  // Per-block Welford accumulators merged in block order: cancellation-free
  // length variance and an aggregation any block partitioning reproduces.
  std::int64_t covered = 0;
  double mean = 0.0;
  double m2 = 0.0;
  int count = 0;
  for (std::uint64_t block = 0; count < replications; ++block) {
    Xoshiro256pp rng(derive_stream_seed(seed, stream_tag, block));
    const int todo = std::min(kReplicationBlock, replications - count);
    double b_mean = 0.0, b_m2 = 0.0;
    for (int i = 0; i < todo; ++i) {
      const RepOutcome out = rep(rng);
      covered += out.covered ? 1 : 0;
      const double d = out.length - b_mean;
      b_mean += d / (i + 1);
      b_m2 += d * (out.length - b_mean);
    }
    const double delta = b_mean - mean;
    const int total = count + todo;
    mean += delta * todo / total;
    m2 += b_m2 + delta * delta * (static_cast<double>(count) * todo) / total;
    count = total;
  }

  const double r = replications;
  const double p = static_cast<double>(covered) / r;
  const double var = replications > 1 ? std::max(0.0, m2 / (r - 1.0)) : 0.0;
  return {p, mean, std::sqrt(p * (1.0 - p) / r), std::sqrt(var / r), replications};
}

/// Draw `replications` samples of size n, build the family's interval for
/// each, and aggregate the coverage indicator and interval length. Same
/// config (including seed) always yields a bit-identical report.
McReport simulate(const McConfig& config);

/// Batch wrapper over n_list; the per-n run seed is
/// derive_stream_seed(master_seed, n).
std::vector<McReport> coverage_curve(const ci::CiFamily& family, double alpha,
                                     const std::vector<int>& n_list,
                                     int replications, std::uint64_t master_seed);

}  // namespace cimono::mc
