#include "czorb/weights.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "czorb/error.hpp"

namespace czorb {

namespace {

// gcd/lcm of every entry except index `skip`. For a two-element list this is
// the other entry.
template <typename Op>
std::vector<std::int64_t> fold_omitting(std::span<const std::int64_t> xs,
                                        std::int64_t identity, Op op) {
  std::vector<std::int64_t> out(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    std::int64_t acc = identity;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i != j) acc = op(acc, xs[i]);
    }
    out[j] = acc;
  }
  return out;
}

}  // namespace

WeightVector WeightVector::make(std::span<const std::int64_t> raw) {
  if (raw.size() < 2) {
    throw DomainError("a weight vector needs at least two entries, got " +
                      std::to_string(raw.size()));
  }
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (raw[j] < 1) {
      throw DomainError("weight w_" + std::to_string(j) + " = " +
                        std::to_string(raw[j]) + " is not positive");
    }
  }
  std::int64_t g = gcd_all(raw);
  if (g != 1) throw NotCoprimeError(g);
  return WeightVector(std::vector<std::int64_t>(raw.begin(), raw.end()));
}

std::int64_t weight_sum(const WeightVector& w) {
  std::int64_t s = 0;
  for (auto x : w.values()) s = checked_add(s, x);
  return s;
}

std::int64_t weight_product(const WeightVector& w) {
  std::int64_t p = 1;
  for (auto x : w.values()) p = checked_mul(p, x);
  return p;
}

namespace {

std::optional<std::int64_t> product_if_fits(const WeightVector& w) {
  try {
    return weight_product(w);
  } catch (const OverflowError&) {
    return std::nullopt;
  }
}

}  // namespace

WeightInvariants invariants(const WeightVector& w) {
  auto values = w.values();
  auto d = fold_omitting(values, 0, [](std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
  });
  auto e = fold_omitting(std::span<const std::int64_t>(d), 1, checked_lcm);
  std::int64_t a_w = lcm_all(d);

  std::vector<std::int64_t> reduced(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] % e[j] != 0) {
      throw InternalError("e_" + std::to_string(j) + " = " + std::to_string(e[j]) +
                          " does not divide w_" + std::to_string(j) + " = " +
                          std::to_string(values[j]));
    }
    reduced[j] = values[j] / e[j];
  }

  bool all_d_one = true;
  for (auto dj : d) all_d_one = all_d_one && dj == 1;
  if (all_d_one != (a_w == 1)) {
    throw InternalError("well-formedness characterizations disagree");
  }

  return WeightInvariants{
      .sum = weight_sum(w),
      .product = product_if_fits(w),
      .d = std::move(d),
      .e = std::move(e),
      .a_w = a_w,
      .reduced = WeightVector::make(reduced),
      .well_formed = all_d_one,
  };
}

Rational symplectic_area(const WeightVector& w) {
  return Rational(-1, weight_product(w));
}

std::int64_t fw_degree(const WeightVector& w) {
  return weight_product(w) / gcd_all(w.values());
}

std::int64_t classifying_multiplier(const WeightVector& w) {
  return weight_product(w);
}

}  // namespace czorb
