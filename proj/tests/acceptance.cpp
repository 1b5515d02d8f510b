// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "czorb/cz_indices.hpp"
#include "czorb/cz_paths.hpp"
#include "czorb/error.hpp"
#include "czorb/numeric_verify.hpp"
#include "czorb/orbifold_topology.hpp"
#include "oracles.hpp"

using namespace czorb;
using V = std::vector<std::int64_t>;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::int64_t cli_index(std::vector<std::string> args) {
  args.push_back("--json");
  std::ostringstream out, err;
  if (czorb_cli::run(args, out, err) != 0) return -999;
  return nlohmann::json::parse(out.str())["index"].get<std::int64_t>();
}

std::string show(const V& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

Check worked_wps() {
  Check c;
  const auto v = cli_index({"cz", "orbit", "--wps", "4,4,5,14", "--support", "0,1"});
  if (v != 8) c.fail("got " + std::to_string(v));
  return c;
}

Check worked_brieskorn() {
  Check c;
  const auto p = cli_index({"cz", "principal", "--brieskorn", "2,2,2,5"});
  const auto o = cli_index({"cz", "orbit", "--brieskorn", "2,2,2,5", "--support", "0,1,2"});
  if (p != 14) c.fail("principal " + std::to_string(p));
  if (o != 3) c.fail("orbit " + std::to_string(o));
  return c;
}

Check triple_agreement() {
  Check c;
  std::mt19937_64 rng(1001);
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 10'000; ++i) {
    const V a = oracle::random_exponents(rng, 3, 8, 30);
    std::int64_t closed = 0;
    if (!oracle::brieskorn_closed_form(a, closed)) {
      c.fail("closed form not integral for " + show(a));
      continue;
    }
    const auto exps = BrieskornExponents::make(a);
    const auto direct = mu_principal_brieskorn(exps).index;
    const auto via_wci = mu_principal(brieskorn_to_wci(exps)).index;
    if (direct != closed || via_wci != closed) {
      c.fail(show(a) + ": " + std::to_string(direct) + " / " + std::to_string(via_wci) +
             " / " + std::to_string(closed));
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10.0) c.fail("took " + std::to_string(secs) + " s");
  if (c.ok) c.detail = std::to_string(secs) + " s";
  return c;
}

Check aw_is_l_over_l2() {
  Check c;
  std::mt19937_64 rng(1001);  // same draws as the triple-agreement check
  for (int i = 0; i < 10'000; ++i) {
    const V a = oracle::random_exponents(rng, 3, 8, 30);
    const auto exps = BrieskornExponents::make(a);
    const auto w = brieskorn_to_wci(exps).weights();
    const V raw(w.values().begin(), w.values().end());
    const auto a_w = oracle::invariants(raw).a_w;
    const auto l = oracle::lcm_by_primes(a);
    const auto l2 = oracle::l2_by_definition(a);
    if (invariants(w).a_w != a_w || a_w * l2 != l) c.fail(show(a));
  }
  return c;
}

Check well_formedness() {
  Check c;
  std::mt19937_64 rng(1005);
  for (int i = 0; i < 10'000; ++i) {
    const V raw = oracle::random_weights(rng, 2, 8, 200);
    const auto inv = invariants(WeightVector::make(raw));
    bool all_one = true;
    for (auto d : inv.d) all_one = all_one && d == 1;
    if (all_one != (inv.a_w == 1)) c.fail("d/a_w mismatch for " + show(raw));
    for (std::size_t j = 0; j < raw.size(); ++j) {
      if (raw[j] % inv.e[j] != 0) c.fail("e_j does not divide w_j for " + show(raw));
    }
    if (!invariants(inv.reduced).well_formed) c.fail("reduced not well-formed: " + show(raw));
  }
  return c;
}

Check scalar_oracle() {
  Check c;
  std::mt19937_64 rng(1006);
  std::uniform_int_distribution<std::int64_t> num(1, 1000), den(1, 20);
  for (int i = 0; i < 1000; ++i) {
    const Rational T(num(rng), den(rng));
    if (scalar_cz(T) != crossing_oracle_scalar(T)) c.fail(T.to_string());
  }
  return c;
}

Check winding_bridge() {
  Check c;
  std::mt19937_64 rng(1007);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const V raw = oracle::random_weights(rng, 2, 8, 200);
    std::int64_t sum = 0;
    for (auto x : raw) sum += x;
    const auto r = det_winding(raw, min_winding_samples(raw));
    worst = std::max(worst, r.residual);
    if (r.winding != sum) c.fail("winding " + std::to_string(r.winding) + " for " + show(raw));
    if (!(r.residual < 0.01)) c.fail("residual " + std::to_string(r.residual));
    const auto mu = mu_principal(WPSpace{WeightVector::make(raw)}).index;
    if (2 * r.winding != mu) c.fail("2*winding != mu_P for " + show(raw));
  }
  if (c.ok) c.detail = "max residual " + std::to_string(worst);
  return c;
}

Check quadrature() {
  Check c;
  std::mt19937_64 rng(1008);
  std::uniform_int_distribution<std::int64_t> dist(1, 100);
  std::int64_t most = 0;
  for (int i = 0; i < 50; ++i) {
    const auto w0 = dist(rng), w1 = dist(rng);
    const auto q = chart_integral(w0, w1, 1e-8);
    most = std::max(most, q.evaluations);
    if (!(std::abs(q.value + 1.0 / static_cast<double>(w0)) <= 1e-8)) {
      c.fail("chart(" + std::to_string(w0) + "," + std::to_string(w1) + ")");
    }
    if (q.evaluations > 1'000'000) c.fail("budget exceeded");
  }
  for (int i = 0; i < 200; ++i) {
    const V raw = oracle::random_weights(rng, 2, 6, 100);
    std::int64_t product = 1;
    for (auto x : raw) product *= x;
    if (area_chain(WeightVector::make(raw)) != Rational(-1, product)) c.fail(show(raw));
  }
  if (c.ok) c.detail = "max evaluations " + std::to_string(most);
  return c;
}

AbelianGroup expected_homology(std::int64_t m, std::int64_t q) {
  if (q == 0 || q == 2) return AbelianGroup::free(1);
  if (q > 1 && q % 2 == 1) return AbelianGroup::cyclic(m);
  return AbelianGroup::trivial();
}

AbelianGroup expected_cohomology(std::int64_t m, std::int64_t q) {
  if (q == 0 || q == 2) return AbelianGroup::free(1);
  if (q > 2 && q % 2 == 0) return AbelianGroup::cyclic(m);
  return AbelianGroup::trivial();
}

Check teardrop_tables() {
  Check c;
  for (std::int64_t m : {2, 3, 5, 12}) {
    for (std::int64_t q = 0; q <= 12; ++q) {
      if (!(teardrop_homology(m, q) == expected_homology(m, q))) {
        c.fail("H_" + std::to_string(q) + " for m=" + std::to_string(m));
      }
      if (!(teardrop_cohomology(m, q) == expected_cohomology(m, q))) {
        c.fail("H^" + std::to_string(q) + " for m=" + std::to_string(m));
      }
    }
    if (teardrop_orbifold_chern(m) != Rational(m + 1, m)) c.fail("chern m=" + std::to_string(m));
  }
  return c;
}

// Draws (w, S) so that the support shares a factor d and the transverse
// weights avoid it; about a third of draws use d = 1.
Check orbit_invariants() {
  Check c;
  std::mt19937_64 rng(1010);
  std::uniform_int_distribution<int> len(3, 7), pick(0, 2), factor(1, 6);
  std::uniform_int_distribution<std::int64_t> entry(1, 12);
  int nonprincipal = 0, principal = 0, uncovered = 0, draws = 0;
  while (draws < 10'000) {
    const int n = len(rng);
    const std::int64_t d = pick(rng) == 0 ? 1 : factor(rng);
    std::uniform_int_distribution<int> ssize(2, n - 1);
    const int s = ssize(rng);
    V w(static_cast<std::size_t>(n));
    V support;
    for (int j = 0; j < n; ++j) {
      if (j < s) {
        w[static_cast<std::size_t>(j)] = d * entry(rng);
        support.push_back(j);
      } else {
        w[static_cast<std::size_t>(j)] = entry(rng) * 7 + 1;
      }
    }
    std::shuffle(w.begin(), w.end(), rng);  // scrambles which slots are in S
    support.clear();
    for (int j = 0; j < n; ++j) {
      if (w[static_cast<std::size_t>(j)] % d == 0 && static_cast<int>(support.size()) < s) {
        support.push_back(j);
      }
    }
    if (support.size() < 2 || oracle::gcd_by_search(w) != 1) continue;
    ++draws;

    std::vector<std::int64_t> in_s;
    for (auto j : support) in_s.push_back(w[static_cast<std::size_t>(j)]);
    const std::int64_t d_s = oracle::gcd_by_search(in_s);
    const auto weights = WeightVector::make(w);
    const auto principal_index = mu_principal(WPSpace{weights}).index;

    CZReport r;
    try {
      r = mu_orbit_wps(weights, support, false);
    } catch (const UncoveredCaseError&) {
      ++uncovered;
      continue;
    }
    if (d_s == 1) {
      ++principal;
      if (r.index != principal_index || r.branch != Branch::PrincipalWps) {
        c.fail("d_S = 1 not principal for " + show(w));
      }
      continue;
    }
    ++nonprincipal;
    if (r.branch != Branch::NonprincipalWps) c.fail("branch for " + show(w));

    std::int64_t transverse = 0;
    std::int64_t tau_sum = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (std::find(support.begin(), support.end(), static_cast<std::int64_t>(k)) !=
          support.end()) {
        continue;
      }
      ++transverse;
      tau_sum += scalar_cz(Rational(w[k], d_s));
    }
    if (((r.index % 2) + 2) % 2 != transverse % 2) c.fail("parity for " + show(w));

    V reduced;
    for (auto x : in_s) reduced.push_back(x / d_s);
    const auto stratum = mu_principal(WPSpace{WeightVector::make(reduced)}).index;
    if (r.index - tau_sum != stratum) c.fail("stratum term for " + show(w));
  }
  if (nonprincipal < 1000) c.fail("too few non-principal draws: " + std::to_string(nonprincipal));
  if (c.ok) {
    c.detail = std::to_string(nonprincipal) + " non-principal, " + std::to_string(principal) +
               " principal, " + std::to_string(uncovered) + " uncovered";
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"P(4,4,5,14) support {0,1} index is 8", worked_wps},
      {"Brieskorn (2,2,2,5) principal 14, support {0,1,2} index 3", worked_brieskorn},
      {"three principal Brieskorn formulas agree on 10^4 draws", triple_agreement},
      {"a_w of converted weights equals l/l2", aw_is_l_over_l2},
      {"well-formedness equivalences on 10^4 weight vectors", well_formedness},
      {"crossing oracle matches scalar index on 10^3 rationals", scalar_oracle},
      {"determinant winding equals |w| and half the principal index", winding_bridge},
      {"chart quadrature within 1e-8 and exact area chain", quadrature},
      {"teardrop (co)homology tables and orbifold Chern number", teardrop_tables},
      {"orbit index parity and stratum consistency on 10^4 draws", orbit_invariants},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d: %s%s%s\n", c.ok ? "PASS" : "FAIL", n, name.c_str(),
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
    if (!c.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
