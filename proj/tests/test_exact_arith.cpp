#include <gtest/gtest.h>

#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "czorb/error.hpp"
#include "czorb/exact_arith.hpp"
#include "oracles.hpp"

using namespace czorb;

namespace {

std::vector<PrimePower> pairs(std::int64_t n) { return factorize(n).pairs(); }

}  // namespace

TEST(Factorize, SmallValues) {
  EXPECT_EQ(pairs(10), (std::vector<PrimePower>{{2, 1}, {5, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  // 1120 = 2^5 * 5 * 7 (trial-division oracle agrees, see FactorizeMatchesNaive)
  EXPECT_EQ(pairs(1120), (std::vector<PrimePower>{{2, 5}, {5, 1}, {7, 1}}));
}

TEST(Factorize, RejectsNonPositive) {
  EXPECT_THROW(factorize(0), DomainError);
  EXPECT_THROW(factorize(-12), DomainError);
}

TEST(Factorize, MatchesNaiveTrialDivision) {
  for (std::int64_t n = 1; n <= 5000; ++n) {
    const auto naive = oracle::naive_factor(n);
    const auto got = factorize(n).pairs();
    ASSERT_EQ(got.size(), naive.size()) << n;
    std::size_t i = 0;
    for (auto [p, e] : naive) {
      EXPECT_EQ(got[i].prime, p) << n;
      EXPECT_EQ(got[i].exponent, e) << n;
      ++i;
    }
  }
}

TEST(Factorize, ReconstructsRandomValues) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000'000);
  for (int i = 0; i < 2000; ++i) {
    const auto n = dist(rng);
    const Factorization f = factorize(n);
    EXPECT_EQ(f.reconstruct(), n);
    for (const auto& pp : f.pairs()) EXPECT_TRUE(is_prime(pp.prime)) << pp.prime;
  }
}

TEST(OrdP, Examples) {
  EXPECT_EQ(ord_p(8, 2), 3);
  EXPECT_EQ(ord_p(10, 5), 1);
  EXPECT_EQ(ord_p(7, 2), 0);
  EXPECT_THROW(ord_p(8, 4), DomainError);
  EXPECT_THROW(ord_p(0, 2), DomainError);
}

TEST(GcdLcm, Examples) {
  const std::vector<std::int64_t> a{4, 4, 14}, b{5, 5, 5}, c{4, 4, 5, 14};
  EXPECT_EQ(gcd_all(a), 2);
  EXPECT_EQ(gcd_all(b), 5);
  EXPECT_EQ(gcd_all(c), 1);
  EXPECT_EQ(gcd_all(a), oracle::gcd_by_search(a));
  EXPECT_EQ(gcd_all(c), oracle::gcd_by_search(c));

  const std::vector<std::int64_t> d{2, 2, 2, 5}, e{1, 1, 1}, f{2, 4, 8};
  EXPECT_EQ(lcm_all(d), 10);
  EXPECT_EQ(lcm_all(e), 1);
  EXPECT_EQ(lcm_all(f), 8);
}

TEST(GcdLcm, EmptyListIsAnError) {
  const std::vector<std::int64_t> empty;
  EXPECT_THROW(gcd_all(empty), DomainError);
  EXPECT_THROW(lcm_all(empty), DomainError);
}

TEST(GcdLcm, LcmOverflowIsReported) {
  const std::vector<std::int64_t> primes{1'000'003, 1'000'033, 1'000'037, 1'000'039};
  EXPECT_THROW(lcm_all(primes), OverflowError);
}

TEST(GcdLcm, RandomProperties) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(1, 5000);
  for (int i = 0; i < 2000; ++i) {
    const std::vector<std::int64_t> two{dist(rng), dist(rng)};
    EXPECT_EQ(gcd_all(two) * lcm_all(two), two[0] * two[1]);
    EXPECT_EQ(gcd_all(two), oracle::gcd_by_search(two));
    EXPECT_EQ(gcd_all(two), oracle::gcd_by_primes(two));

    std::vector<std::int64_t> xs(static_cast<std::size_t>(2 + i % 5));
    for (auto& x : xs) x = 1 + dist(rng) % 300;
    const std::int64_t l = lcm_all(xs);
    EXPECT_EQ(l, oracle::lcm_by_primes(xs));
    for (const auto& pp : factorize(l).pairs()) {
      int best = 0;
      for (auto x : xs) best = std::max(best, ord_p(x, pp.prime));
      EXPECT_EQ(ord_p(l, pp.prime), best);
    }
  }
}

TEST(RationalTest, NormalizesSignAndCommonFactors) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(RationalTest, NormalizationIsIdempotent) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> num(-10000, 10000), den(1, 10000);
  for (int i = 0; i < 1000; ++i) {
    const Rational r(num(rng), den(rng));
    const Rational again(r.num(), r.den());
    EXPECT_EQ(again.num(), r.num());
    EXPECT_EQ(again.den(), r.den());
    EXPECT_GE(r.den(), 1);
    EXPECT_EQ(std::gcd(r.num() < 0 ? -r.num() : r.num(), r.den()), r.num() == 0 ? r.den() : 1);
  }
}

TEST(RationalTest, ArithmeticAndOrdering) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(RationalTest, OverflowIsDetected) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  EXPECT_THROW(Rational(big) + Rational(big), OverflowError);
  EXPECT_THROW(Rational(big) * Rational(4), OverflowError);
  EXPECT_THROW(checked_mul(big, 3), OverflowError);
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(Rational::parse("7/2"), Rational(7, 2));
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_EQ(Rational(7, 2).to_string(), "7/2");
  EXPECT_EQ(Rational(4).to_string(), "4");
  EXPECT_THROW(Rational::parse("1/0"), DomainError);
  EXPECT_THROW(Rational::parse("x"), DomainError);
  EXPECT_THROW(Rational::parse("1.5"), DomainError);
  EXPECT_THROW(Rational::parse("3/"), DomainError);
}
