#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cimono::verify {

/// One verification row: an identifier, a pass flag, and the worst margin
/// observed over the check's grid (positive slack means pass).
struct VerifyCheck {
  std::string id;
  bool passed;
  double margin;
};

/// Two-sided gamma-ratio bound on the documented grids: 10^4 log-spaced
/// points over (1e-3, 1e4] plus the semi-integers k/2, k = 1..200.
std::vector<VerifyCheck> verify_lemma2();

/// E_2..E_4 closed forms, strict decrease up to n = 10^4, and the
/// bound-separation / sandwich structure for n >= 4.
std::vector<VerifyCheck> verify_en_chain();

/// Raw stochastic ordering of unit-scale gamma quantiles and the
/// quantile-order reversal on both sides of alpha*.
std::vector<VerifyCheck> verify_ordering();

/// Crossing-report structure: residuals, bracket ordering, the
/// single-crossing sign pattern and the uniqueness of the sign change on a
/// fine grid.
std::vector<VerifyCheck> verify_crossing();

/// Mean-length monotonicity of all five families on the documented grids,
/// under the alpha < alpha* hypothesis where it applies, plus the normalized
/// quantile inequalities and Student-quantile monotonicity in d.
std::vector<VerifyCheck> verify_monotonicity();

/// Dispatch by suite name ("lemma2", "en-chain", "ordering", "crossing",
/// "monotonicity", "all"); throws std::domain_error for unknown names.
std::vector<VerifyCheck> verify_suite(std::string_view name);

}  // namespace cimono::verify
