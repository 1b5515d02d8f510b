#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace czorb {

// Checked 64-bit arithmetic. Every overflow throws OverflowError.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, sorted by ascending prime. Empty for 1.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> pairs);

  const std::vector<PrimePower>& pairs() const& noexcept { return pairs_; }
  std::vector<PrimePower> pairs() && noexcept { return std::move(pairs_); }
  bool empty() const noexcept { return pairs_.empty(); }

  /// Exponent of `prime`, 0 if absent.
  int exponent_of(std::int64_t prime) const noexcept;

  std::int64_t reconstruct() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
};

bool is_prime(std::int64_t n);

/// Trial division with a 2-3 wheel.
Factorization factorize(std::int64_t n);

/// Largest e with p^e | n.
int ord_p(std::int64_t n, std::int64_t p);

std::int64_t ipow(std::int64_t base, int exponent);

std::int64_t gcd_all(std::span<const std::int64_t> xs);
std::int64_t lcm_all(std::span<const std::int64_t> xs);
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

/// Floor division for a positive divisor.
std::int64_t floor_div(std::int64_t num, std::int64_t den);

/// Normalized rational number: gcd(|num|, den) = 1 and den >= 1.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value);  // NOLINT: implicit from integers is intended
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  std::int64_t floor() const { return floor_div(num_, den_); }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  /// "p/q", or just "p" for integers.
  std::string to_string() const;

  /// Accepts "p/q" or "p" with optional leading minus.
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace czorb
