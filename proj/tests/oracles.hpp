#pragma once

// Test-only reference computations. Nothing here calls into the library;
// each routine evaluates a definition directly, usually by brute force.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

/// Largest d dividing every entry, found by searching down from the minimum.
inline i64 gcd_by_search(std::span<const i64> xs) {
  i64 lo = *std::min_element(xs.begin(), xs.end());
  for (i64 d = lo; d > 1; --d) {
    if (std::all_of(xs.begin(), xs.end(), [d](i64 x) { return x % d == 0; })) return d;
  }
  return 1;
}

/// Trial division by every integer, no wheel.
inline std::map<i64, int> naive_factor(i64 n) {
  std::map<i64, int> out;
  for (i64 d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline i64 power(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// gcd as the product of minimal prime powers; fast enough for entries
/// where counting down from the minimum is not.
inline i64 gcd_by_primes(std::span<const i64> xs) {
  i64 r = 1;
  for (auto [p, e] : naive_factor(*std::min_element(xs.begin(), xs.end()))) {
    int lo = e;
    for (i64 x : xs) {
      int v = 0;
      for (i64 y = x; y % p == 0; y /= p) ++v;
      lo = std::min(lo, v);
    }
    for (int k = 0; k < lo; ++k) r *= p;
  }
  return r;
}

/// lcm as the product of maximal prime powers.
inline i64 lcm_by_primes(std::span<const i64> xs) {
  std::map<i64, int> best;
  for (i64 x : xs) {
    for (auto [p, e] : naive_factor(x)) best[p] = std::max(best[p], e);
  }
  i64 r = 1;
  for (auto [p, e] : best) r *= power(p, e);
  return r;
}

inline int valuation(i64 n, i64 p) {
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

struct Invariants {
  i64 sum = 0;
  std::vector<i64> d, e, reduced;
  i64 a_w = 1;
};

inline std::vector<i64> omit(std::span<const i64> xs, std::size_t j) {
  std::vector<i64> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != j) out.push_back(xs[i]);
  }
  return out;
}

/// Weight invariants straight from their definitions.
inline Invariants invariants(std::span<const i64> w) {
  Invariants inv;
  for (i64 x : w) inv.sum += x;
  for (std::size_t j = 0; j < w.size(); ++j) inv.d.push_back(gcd_by_primes(omit(w, j)));
  for (std::size_t j = 0; j < w.size(); ++j) inv.e.push_back(lcm_by_primes(omit(inv.d, j)));
  inv.a_w = lcm_by_primes(inv.d);
  for (std::size_t j = 0; j < w.size(); ++j) inv.reduced.push_back(w[j] / inv.e[j]);
  return inv;
}

/// 2 lcm(a) (sum 1/a_j - 1) over the common denominator prod a_j in 128 bits.
/// Returns false if the value is not an integer.
inline bool brieskorn_closed_form(std::span<const i64> a, i64& out) {
  __int128 prod = 1;
  for (i64 x : a) prod *= x;
  __int128 num = -prod;
  for (i64 x : a) num += prod / x;
  const __int128 total = 2 * static_cast<__int128>(lcm_by_primes(a)) * num;
  if (total % prod != 0) return false;
  out = static_cast<i64>(total / prod);
  return true;
}

/// Second-largest p-adic valuation (with multiplicity), per prime of lcm(a).
inline i64 l2_by_definition(std::span<const i64> a) {
  i64 r = 1;
  for (auto [p, s] : naive_factor(lcm_by_primes(a))) {
    std::vector<int> v;
    for (i64 x : a) v.push_back(valuation(x, p));
    std::sort(v.rbegin(), v.rend());
    r *= power(p, v.size() > 1 ? v[1] : 0);
  }
  return r;
}

/// Random weight vector with gcd 1; length in [min_len, max_len], entries in
/// [1, max_entry].
inline std::vector<i64> random_weights(std::mt19937_64& rng, int min_len, int max_len,
                                       i64 max_entry) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<i64> entry(1, max_entry);
  while (true) {
    std::vector<i64> w(static_cast<std::size_t>(len(rng)));
    for (auto& x : w) x = entry(rng);
    if (gcd_by_search(w) == 1) return w;
  }
}

inline std::vector<i64> random_exponents(std::mt19937_64& rng, int min_n, int max_n,
                                         i64 max_a) {
  std::uniform_int_distribution<int> n(min_n, max_n);
  std::uniform_int_distribution<i64> entry(2, max_a);
  std::vector<i64> a(static_cast<std::size_t>(n(rng) + 1));
  for (auto& x : a) x = entry(rng);
  return a;
}

}  // namespace oracle
