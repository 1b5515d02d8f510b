#include "czorb/exact_arith.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "czorb/error.hpp"

namespace czorb {

namespace {

using Wide = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::int64_t narrow(Wide v, const char* what) {
  if (v > kMax || v < -static_cast<Wide>(kMax)) {
    throw OverflowError(what);
  }
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Normalizes num/den computed in 128 bits and narrows back.
void normalize_into(Wide num, Wide den, std::int64_t& out_num,
                    std::int64_t& out_den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  out_num = narrow(num, "rational numerator");
  out_den = narrow(den, "rational denominator");
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("multiplication");
  return r;
}

Factorization::Factorization(std::vector<PrimePower> pairs)
    : pairs_(std::move(pairs)) {}

int Factorization::exponent_of(std::int64_t prime) const noexcept {
  for (const auto& pp : pairs_) {
    if (pp.prime == prime) return pp.exponent;
  }
  return 0;
}

std::int64_t Factorization::reconstruct() const {
  std::int64_t n = 1;
  for (const auto& pp : pairs_) n = checked_mul(n, ipow(pp.prime, pp.exponent));
  return n;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Factorization factorize(std::int64_t n) {
  if (n < 1) {
    throw DomainError("factorize requires n >= 1, got " + std::to_string(n));
  }
  std::vector<PrimePower> out;
  auto strip = [&](std::int64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 2-3 wheel: candidates 6k-1, 6k+1.
  for (std::int64_t d = 5; d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return Factorization(std::move(out));
}

int ord_p(std::int64_t n, std::int64_t p) {
  if (n < 1) throw DomainError("ord_p requires n >= 1");
  if (!is_prime(p)) {
    throw DomainError("ord_p requires a prime, got " + std::to_string(p));
  }
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::int64_t ipow(std::int64_t base, int exponent) {
  if (exponent < 0) throw DomainError("negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

std::int64_t gcd_all(std::span<const std::int64_t> xs) {
  if (xs.empty()) throw DomainError("gcd of an empty list");
  std::int64_t g = 0;
  for (auto x : xs) {
    if (x < 1) throw DomainError("gcd_all requires positive entries");
    g = std::gcd(g, x);
  }
  return g;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw DomainError("lcm requires positive entries");
  return checked_mul(a / std::gcd(a, b), b);
}

std::int64_t lcm_all(std::span<const std::int64_t> xs) {
  if (xs.empty()) throw DomainError("lcm of an empty list");
  std::int64_t l = 1;
  for (auto x : xs) l = checked_lcm(l, x);
  return l;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("floor_div requires a positive divisor");
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

Rational::Rational(std::int64_t value) : num_(value), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  normalize_into(num, den, num_, den_);
}

Rational Rational::operator-() const { return Rational(checked_sub(0, num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  normalize_into(static_cast<Wide>(num_) * o.den_ + static_cast<Wide>(o.num_) * den_,
                 static_cast<Wide>(den_) * o.den_, num_, den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  normalize_into(static_cast<Wide>(num_) * o.num_,
                 static_cast<Wide>(den_) * o.den_, num_, den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("division by zero rational");
  normalize_into(static_cast<Wide>(num_) * o.den_,
                 static_cast<Wide>(den_) * o.num_, num_, den_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (part.empty() || ec == std::errc::result_out_of_range) {
      throw DomainError("cannot parse rational '" + std::string(text) + "'");
    }
    if (ec != std::errc() || ptr != last) {
      throw DomainError("cannot parse rational '" + std::string(text) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace czorb
