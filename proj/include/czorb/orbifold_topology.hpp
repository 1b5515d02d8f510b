#pragma once

#include <cstdint>
#include <string>

#include "czorb/exact_arith.hpp"

namespace czorb {

/// Finitely generated abelian group of the shapes that occur for the
/// teardrop: 0, Z^r, or Z_m.
class AbelianGroup {
 public:
  enum class Kind { Trivial, Free, Cyclic };

  static AbelianGroup trivial() { return AbelianGroup(Kind::Trivial, 0); }
  static AbelianGroup free(std::int64_t rank);
  static AbelianGroup cyclic(std::int64_t order);

  Kind kind() const noexcept { return kind_; }
  /// Rank for Free, order for Cyclic, 0 for Trivial.
  std::int64_t parameter() const noexcept { return parameter_; }

  /// "0", "Z", "Z^3", "Z_5".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  AbelianGroup(Kind k, std::int64_t p) : kind_(k), parameter_(p) {}
  Kind kind_;
  std::int64_t parameter_;
};

// Orbifold (co)homology of the teardrop P(1,m), m >= 2, as closed forms in q.
AbelianGroup teardrop_homology(std::int64_t m, std::int64_t q);
AbelianGroup teardrop_cohomology(std::int64_t m, std::int64_t q);

/// 2 - (1 - 1/m) = 1 + 1/m. m = 1 is the smooth sphere.
Rational teardrop_orbifold_chern(std::int64_t m);

/// Multiplier of p_*: H_2^orb(P(1,m); Q) -> H_2(P(1,m); Q).
Rational p_star_factor(std::int64_t m);

}  // namespace czorb
