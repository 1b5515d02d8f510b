#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "czorb/spaces.hpp"

namespace czorb {

enum class Branch {
  PrincipalWps,
  PrincipalWci,
  PrincipalBrieskorn,
  NonprincipalWps,
  NonprincipalBrieskorn,
  TwoWeightSpecial,
};

const char* to_string(Branch b) noexcept;

/// Reeb orbit stratum: the coordinates that stay nonzero, and the isotropy
/// order d_S = gcd of the ambient weights over them.
class OrbitSpec {
 public:
  /// Sorts and deduplicates `support`; recomputes the isotropy from `w`.
  static OrbitSpec make(const WeightVector& w, std::span<const std::int64_t> support);

  const std::vector<std::size_t>& support() const noexcept { return support_; }
  std::int64_t isotropy() const noexcept { return isotropy_; }
  bool contains(std::size_t j) const noexcept;
  bool is_full() const noexcept { return full_; }

 private:
  OrbitSpec(std::vector<std::size_t> s, std::int64_t d, bool full)
      : support_(std::move(s)), isotropy_(d), full_(full) {}
  std::vector<std::size_t> support_;
  std::int64_t isotropy_;
  bool full_;
};

struct CZReport {
  std::int64_t index;
  std::optional<std::int64_t> b_constant;
  Branch branch;
  bool extrapolated = false;
  std::string formula;  // which closed form produced the index
  std::vector<std::string> notes;
};

/// |w| for P(w); |w| - sum m_j for a complete intersection (may be <= 0).
std::int64_t b_constant(const Space& space);

/// Principal orbit: 2 b.
CZReport mu_principal(const Space& space);

/// 2 l (sum 1/a_j - 1), cross-checked against the hypersurface route.
CZReport mu_principal_brieskorn(const BrieskornExponents& a);

/// Non-principal orbit in P(w) by one-step stratum reduction.
CZReport mu_orbit_wps(const WeightVector& w, std::span<const std::int64_t> support,
                      bool allow_extrapolation);

/// Non-principal orbit on a Brieskorn hypersurface; |S| >= 3 required.
CZReport mu_orbit_brieskorn(const BrieskornExponents& a,
                            std::span<const std::int64_t> support,
                            bool allow_extrapolation);

/// 2 lcm(a) (sum 1/a_j - 1) computed with exact rationals over any exponent
/// list; shared by the principal Brieskorn formula and stratum reductions.
std::int64_t brieskorn_mu_formula(std::span<const std::int64_t> a);

}  // namespace czorb
