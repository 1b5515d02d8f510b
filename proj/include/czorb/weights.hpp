#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "czorb/exact_arith.hpp"

namespace czorb {

/// Positive integer weights w_0..w_n (n >= 1) with gcd 1.
class WeightVector {
 public:
  /// Validates `raw`. Throws DomainError for short vectors or non-positive
  /// entries, NotCoprimeError when the entries share a factor.
  static WeightVector make(std::span<const std::int64_t> raw);

  std::span<const std::int64_t> values() const noexcept { return w_; }
  std::size_t size() const noexcept { return w_.size(); }
  std::int64_t operator[](std::size_t j) const { return w_.at(j); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  explicit WeightVector(std::vector<std::int64_t> w) : w_(std::move(w)) {}
  std::vector<std::int64_t> w_;
};

struct WeightInvariants {
  std::int64_t sum;      // |w|
  std::optional<std::int64_t> product;  // ||w||, absent if it overflows int64
  std::vector<std::int64_t> d;  // gcd of all weights except w_j
  std::vector<std::int64_t> e;  // lcm of all d_i except d_j
  std::int64_t a_w;             // lcm of all d_j
  WeightVector reduced;         // w_j / e_j
  bool well_formed;
};

/// Computes every invariant at once. Throws InternalError if some e_j does
/// not divide w_j. The product is left empty when it does not fit in int64.
WeightInvariants invariants(const WeightVector& w);

std::int64_t weight_sum(const WeightVector& w);
std::int64_t weight_product(const WeightVector& w);

/// Cohomology class of the quotient symplectic form: -1/||w||.
Rational symplectic_area(const WeightVector& w);

/// Degree of [z_j] -> [z_j^{w_j}] from P^n onto P(w): ||w|| / gcd = ||w||.
std::int64_t fw_degree(const WeightVector& w);

/// Factor of p^* on H^2(.;Q) for the classifying-space map: ||w||.
std::int64_t classifying_multiplier(const WeightVector& w);

}  // namespace czorb
