#include "czorb/cz_paths.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "czorb/error.hpp"

namespace czorb {

namespace {

constexpr double kMaxResidual = 0.01;
// Cap on the number of crossings the enumeration oracle walks.
constexpr std::int64_t kMaxCrossings = 100'000'000;

void require_positive_duration(const Rational& T) {
  if (T.sign() <= 0) {
    throw DomainError("path duration must be positive, got " + T.to_string());
  }
}

}  // namespace

DiagonalPath DiagonalPath::make(std::vector<ScalarPath> components) {
  if (components.empty()) throw DomainError("a diagonal path needs a component");
  for (const auto& c : components) {
    require_positive_duration(c.duration);
    if (c.duration != components.front().duration) {
      throw DomainError("diagonal components must share one duration");
    }
  }
  return DiagonalPath(std::move(components));
}

DiagonalPath DiagonalPath::from_rates(std::span<const Rational> rates, Rational duration) {
  std::vector<ScalarPath> c;
  c.reserve(rates.size());
  for (const auto& r : rates) c.push_back({r, duration});
  return make(std::move(c));
}

std::int64_t scalar_cz(const Rational& T) {
  require_positive_duration(T);
  if (T.is_integer() && T.num() % 2 == 0) return T.num();
  return checked_add(checked_mul(2, floor_div(T.num(), checked_mul(2, T.den()))), 1);
}

std::int64_t scalar_cz_rated(const ScalarPath& p) {
  require_positive_duration(p.duration);
  if (p.rate.sign() <= 0) {
    throw UncoveredCaseError("only positively rotating paths are supported, rate = " +
                             p.rate.to_string());
  }
  return scalar_cz(p.rate * p.duration);
}

std::int64_t diagonal_cz(const DiagonalPath& p) {
  std::int64_t total = 0;
  for (const auto& c : p.components()) total = checked_add(total, scalar_cz_rated(c));
  return total;
}

std::int64_t loop_cz_from_maslov(std::int64_t maslov) { return checked_mul(2, maslov); }

std::int64_t crossing_oracle_scalar(const Rational& T) {
  require_positive_duration(T);
  if (T > Rational(2 * kMaxCrossings)) {
    throw DomainError("duration " + T.to_string() + " is too long to enumerate");
  }
  std::int64_t index = 1;  // crossing at t = 0
  for (std::int64_t t = 2;; t += 2) {
    const auto c = Rational(t) <=> T;
    if (c < 0) {
      index += 2;
    } else {
      if (c == 0) index += 1;
      break;
    }
  }
  return index;
}

std::int64_t min_winding_samples(std::span<const std::int64_t> rates) {
  std::int64_t total = 0;
  for (auto r : rates) total = checked_add(total, r < 0 ? checked_sub(0, r) : r);
  return checked_add(checked_mul(4, total), 16);
}

WindingResult det_winding(std::span<const std::int64_t> rates, std::int64_t samples) {
  if (rates.empty()) throw DomainError("det_winding needs at least one rate");
  const std::int64_t needed = min_winding_samples(rates);
  if (samples < needed) {
    throw DomainError("det_winding needs at least " + std::to_string(needed) +
                      " samples, got " + std::to_string(samples));
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  auto det_at = [&](double t) {
    std::complex<double> z(1.0, 0.0);
    for (auto r : rates) z *= std::polar(1.0, two_pi * static_cast<double>(r) * t);
    return z;
  };

  double phase = 0.0;
  std::complex<double> prev = det_at(0.0);
  for (std::int64_t k = 1; k <= samples; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(samples);
    const std::complex<double> cur = det_at(t);
    phase += std::arg(cur / prev);  // principal step, |step| < pi by sampling
    prev = cur;
  }
  const double turns = phase / two_pi;
  const double rounded = std::round(turns);
  const double residual = std::abs(turns - rounded);
  if (residual > kMaxResidual) {
    throw ResolutionError("winding residual " + std::to_string(residual) +
                              " exceeds 0.01; increase the sample count",
                          residual);
  }
  return {static_cast<std::int64_t>(rounded), residual, samples};
}

}  // namespace czorb
