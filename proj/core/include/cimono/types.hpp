#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace cimono {

/// Iterative solver ran out of its iteration budget. Carries the last
/// bracketing interval so callers can inspect how far the solve got.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double bracket_lo, double bracket_hi)
      : std::runtime_error(what), lo_(bracket_lo), hi_(bracket_hi) {}

  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// A structural assumption failed numerically (e.g. a bracket that is
/// guaranteed analytically did not show the expected sign change).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested value lies outside the attainable range of a monotone map.
class RangeError : public std::runtime_error {
 public:
  RangeError(const std::string& what, double attainable_lo, double attainable_hi)
      : std::runtime_error(what), lo_(attainable_lo), hi_(attainable_hi) {}

  double attainable_lo() const noexcept { return lo_; }
  double attainable_hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// A probability strictly inside (0, 1). Boundary values are rejected:
/// every quantile order used in the library must be an interior point.
class Probability {
 public:
  explicit Probability(double p) : p_(p) {
    if (!(p > 0.0) || !(p < 1.0))
      throw std::domain_error("Probability: value " + std::to_string(p) +
                              " not in the open interval (0, 1)");
  }

  double value() const noexcept { return p_; }
  operator double() const noexcept { return p_; }

 private:
  double p_;
};

/// A finite, strictly positive real (shapes, scales, lengths, quantiles).
class PositiveReal {
 public:
  explicit PositiveReal(double v) : v_(v) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::domain_error("PositiveReal: value " + std::to_string(v) +
                              " is not finite and strictly positive");
  }

  double value() const noexcept { return v_; }
  operator double() const noexcept { return v_; }

 private:
  double v_;
};

}  // namespace cimono
