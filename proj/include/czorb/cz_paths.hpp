#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "czorb/exact_arith.hpp"

namespace czorb {

/// t -> exp(i pi rate t) on [0, duration].
struct ScalarPath {
  Rational rate;
  Rational duration;
};

/// Direct sum of scalar paths over a common time interval.
class DiagonalPath {
 public:
  static DiagonalPath make(std::vector<ScalarPath> components);
  static DiagonalPath from_rates(std::span<const Rational> rates, Rational duration);

  const std::vector<ScalarPath>& components() const noexcept { return components_; }

 private:
  explicit DiagonalPath(std::vector<ScalarPath> c) : components_(std::move(c)) {}
  std::vector<ScalarPath> components_;
};

/// Index of exp(i pi t), t in [0, T]: T when T is an even integer,
/// 2 floor(T/2) + 1 otherwise.
std::int64_t scalar_cz(const Rational& T);

/// Reparametrizes to unit rate. Only positive rates are supported.
std::int64_t scalar_cz_rated(const ScalarPath& p);

/// Sum over components (product property).
std::int64_t diagonal_cz(const DiagonalPath& p);

/// Loop property with a trivial path: twice the Maslov index.
std::int64_t loop_cz_from_maslov(std::int64_t maslov);

/// Independent check of scalar_cz: walks the crossings t in 2Z of [0, T],
/// counting 1 at each endpoint crossing and 2 at each interior one.
std::int64_t crossing_oracle_scalar(const Rational& T);

struct WindingResult {
  std::int64_t winding;
  double residual;  // |unwrapped turns - winding| before rounding
  std::int64_t samples;
};

/// Smallest sample count accepted by det_winding for these rates.
std::int64_t min_winding_samples(std::span<const std::int64_t> rates);

/// Winding number of t -> prod_j exp(2 pi i r_j t) on [0, 1], obtained by
/// sampling the complex product and unwrapping its phase.
WindingResult det_winding(std::span<const std::int64_t> rates, std::int64_t samples);

}  // namespace czorb
