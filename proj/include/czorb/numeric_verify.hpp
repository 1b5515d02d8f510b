#pragma once

#include <cstdint>

#include "czorb/exact_arith.hpp"
#include "czorb/weights.hpp"

namespace czorb {

struct QuadratureResult {
  double value;
  double estimated_error;
  std::int64_t evaluations;
};

inline constexpr std::int64_t kDefaultEvalBudget = 1'000'000;

/// Chart integral -(1/pi) int_0^{2pi} int_0^inf w1 r / (w0 r^2 + w1)^2 dr dtheta,
/// which equals -1/w0. The angular factor is exact; the radial integral is
/// compactified by u = r/(1+r) and computed by adaptive Simpson.
/// Throws ConvergenceError if `tol` is not reached within `eval_budget`.
QuadratureResult chart_integral(std::int64_t w0, std::int64_t w1, double tol,
                                std::int64_t eval_budget = kDefaultEvalBudget);

/// Exact bookkeeping from the chart value down to the class of the symplectic
/// form on P(full_w), using its first two weights for the chart.
struct AreaChain {
  Rational chart_value;   // -1/w0
  std::int64_t group_order;  // w1 / gcd(w0, w1)
  Rational local_value;   // -gcd(w0, w1)/(w0 w1)
  Rational inclusion_degree;  // ||w|| gcd(w0, w1) / (w0 w1)
  Rational area;          // local_value / inclusion_degree = -1/||w||
};

AreaChain area_chain_steps(const WeightVector& full_w);
Rational area_chain(const WeightVector& full_w);

}  // namespace czorb
