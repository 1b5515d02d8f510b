#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "czorb/weights.hpp"

namespace czorb {

/// Weighted projective space P(w) with its quotient orbifold structure.
struct WPSpace {
  WeightVector weights;
};

/// Quasi-smooth weighted complete intersection of multidegree (m_1..m_r) in
/// P(w). Quasi-smoothness is taken on trust; only 1 <= r <= n - 2 is checked.
class WCISpace {
 public:
  static WCISpace make(WeightVector weights, std::span<const std::int64_t> degrees);

  const WeightVector& weights() const noexcept { return weights_; }
  std::span<const std::int64_t> degrees() const noexcept { return degrees_; }

 private:
  WCISpace(WeightVector w, std::vector<std::int64_t> m)
      : weights_(std::move(w)), degrees_(std::move(m)) {}
  WeightVector weights_;
  std::vector<std::int64_t> degrees_;
};

using Space = std::variant<WPSpace, WCISpace>;

/// Exponents a_0..a_n (n >= 3, a_j >= 2) of sum z_j^{a_j} = 0, with
/// l = lcm(a_j) and the second-largest-valuation companion l2.
class BrieskornExponents {
 public:
  static BrieskornExponents make(std::span<const std::int64_t> a);

  std::span<const std::int64_t> exponents() const noexcept { return a_; }
  std::size_t size() const noexcept { return a_.size(); }
  std::int64_t l() const noexcept { return l_; }
  std::int64_t l2() const noexcept { return l2_; }

 private:
  BrieskornExponents(std::vector<std::int64_t> a, std::int64_t l, std::int64_t l2)
      : a_(std::move(a)), l_(l), l2_(l2) {}
  std::vector<std::int64_t> a_;
  std::int64_t l_;
  std::int64_t l2_;
};

/// For every prime p | lcm(a), takes the second-largest of ord_p(a_j)
/// counted with multiplicity (a repeated maximum is its own runner-up).
std::int64_t compute_l2(std::span<const std::int64_t> a);

/// Hypersurface of degree l in P(l/a_0, ..., l/a_n).
WCISpace brieskorn_to_wci(const BrieskornExponents& a);

enum class ConditionStatus { Satisfied, Violated, Assumed };

struct HypothesesReport {
  std::int64_t b_constant;
  ConditionStatus first_chern;       // c_1^orb = -b[omega] with integral b
  ConditionStatus simply_connected;  // pi_1^orb = 0
  ConditionStatus total_space_manifold;
  std::vector<std::string> notes;
};

HypothesesReport check_theorem_hypotheses(const Space& space);

const char* to_string(ConditionStatus s) noexcept;

}  // namespace czorb
