#include "czorb/cz_indices.hpp"

#include <algorithm>
#include <numeric>

#include "czorb/error.hpp"

namespace czorb {

namespace {

constexpr const char* kTheoremFormula = "mu_CZ(|Gamma_q| gamma) = 2 b";
constexpr const char* kWpsFormula = "mu_P(P(w)) = 2|w|";
constexpr const char* kWciFormula = "mu_P(X) = 2(|w| - sum m_j)";
constexpr const char* kBrieskornFormula = "mu_P = 2 l (sum 1/a_j - 1)";
constexpr const char* kTwoWeightFormula = "mu_CZ(gamma) = 2 floor((m+n)/(2m)) + 1";
constexpr const char* kReductionFormula =
    "mu_CZ = (2/d_S) sum_{S} w_j + sum_{k not in S} (2 floor(w_k/(2 d_S)) + 1)";
constexpr const char* kBrieskornReductionFormula =
    "mu_CZ = mu_P(sum_{S} z_j^{a_j}) + sum_{k not in S} (2 floor(w_k/(2 d_S)) + 1)";

std::int64_t transverse_term(std::int64_t w_k, std::int64_t d_S) {
  return checked_add(checked_mul(2, floor_div(w_k, checked_mul(2, d_S))), 1);
}

struct TransverseSum {
  std::int64_t total = 0;
  bool extrapolated = false;
  std::vector<std::string> notes;
};

// Sums transverse contributions for every coordinate outside the support.
// A coordinate with w_k/d_S an even integer makes the transverse path a loop,
// which no worked case covers; it is refused unless extrapolation is allowed.
TransverseSum transverse_sum(std::span<const std::int64_t> weights, const OrbitSpec& orbit,
                             bool allow_extrapolation) {
  TransverseSum out;
  const std::int64_t d_S = orbit.isotropy();
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (orbit.contains(k)) continue;
    const std::int64_t w_k = weights[k];
    const bool loop = w_k % d_S == 0 && (w_k / d_S) % 2 == 0;
    if (!loop) {
      out.total = checked_add(out.total, transverse_term(w_k, d_S));
      continue;
    }
    if (!allow_extrapolation) {
      throw UncoveredCaseError("transverse coordinate k = " + std::to_string(k) +
                               " has w_k/d_S = " + std::to_string(w_k / d_S) +
                               ", an even integer; pass allow_extrapolation to use "
                               "the even branch of the scalar formula");
    }
    out.total = checked_add(out.total, w_k / d_S);
    out.extrapolated = true;
    out.notes.push_back("extrapolated: transverse k = " + std::to_string(k) +
                        " closes into a loop (w_k/d_S = " + std::to_string(w_k / d_S) +
                        "); used tau_k = w_k/d_S");
  }
  return out;
}

}  // namespace

const char* to_string(Branch b) noexcept {
  switch (b) {
    case Branch::PrincipalWps: return "principal-wps";
    case Branch::PrincipalWci: return "principal-wci";
    case Branch::PrincipalBrieskorn: return "principal-brieskorn";
    case Branch::NonprincipalWps: return "nonprincipal-wps";
    case Branch::NonprincipalBrieskorn: return "nonprincipal-brieskorn";
    case Branch::TwoWeightSpecial: return "two-weight-special";
  }
  return "unknown";
}

OrbitSpec OrbitSpec::make(const WeightVector& w, std::span<const std::int64_t> support) {
  if (support.empty()) throw DomainError("orbit support must be nonempty");
  std::vector<std::size_t> s;
  s.reserve(support.size());
  for (auto j : support) {
    if (j < 0 || static_cast<std::size_t>(j) >= w.size()) {
      throw DomainError("support index " + std::to_string(j) + " is outside 0.." +
                        std::to_string(w.size() - 1));
    }
    s.push_back(static_cast<std::size_t>(j));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::int64_t d = 0;
  for (auto j : s) d = std::gcd(d, w[j]);
  const bool full = s.size() == w.size();
  return OrbitSpec(std::move(s), d, full);
}

bool OrbitSpec::contains(std::size_t j) const noexcept {
  return std::binary_search(support_.begin(), support_.end(), j);
}

std::int64_t b_constant(const Space& space) {
  if (const auto* p = std::get_if<WPSpace>(&space)) return weight_sum(p->weights);
  const auto& x = std::get<WCISpace>(space);
  std::int64_t b = weight_sum(x.weights());
  for (auto m : x.degrees()) b = checked_sub(b, m);
  return b;
}

CZReport mu_principal(const Space& space) {
  const std::int64_t b = b_constant(space);
  CZReport r{
      .index = checked_mul(2, b),
      .b_constant = b,
      .branch = Branch::PrincipalWps,
      .extrapolated = false,
      .formula = kWpsFormula,
      .notes = {},
  };
  if (std::holds_alternative<WCISpace>(space)) {
    r.branch = Branch::PrincipalWci;
    r.formula = kWciFormula;
    if (b <= 0) {
      r.notes.push_back("b = " + std::to_string(b) +
                        " is not positive; the formula carries no positivity guard");
    }
  }
  return r;
}

std::int64_t brieskorn_mu_formula(std::span<const std::int64_t> a) {
  const std::int64_t l = lcm_all(a);
  Rational s = -1;
  for (auto aj : a) s += Rational(1, aj);
  const Rational mu = Rational(2) * Rational(l) * s;
  if (!mu.is_integer()) {
    throw InternalError("2 l (sum 1/a_j - 1) = " + mu.to_string() + " is not an integer");
  }
  return mu.num();
}

CZReport mu_principal_brieskorn(const BrieskornExponents& a) {
  const std::int64_t index = brieskorn_mu_formula(a.exponents());
  const CZReport via_wci = mu_principal(brieskorn_to_wci(a));
  if (via_wci.index != index) {
    throw InternalError("Brieskorn formula gives " + std::to_string(index) +
                        " but the hypersurface formula gives " +
                        std::to_string(via_wci.index));
  }
  return CZReport{
      .index = index,
      .b_constant = via_wci.b_constant,
      .branch = Branch::PrincipalBrieskorn,
      .extrapolated = false,
      .formula = kBrieskornFormula,
      .notes = {"l = " + std::to_string(a.l()) + ", l2 = " + std::to_string(a.l2())},
  };
}

CZReport mu_orbit_wps(const WeightVector& w, std::span<const std::int64_t> support,
                      bool allow_extrapolation) {
  const OrbitSpec orbit = OrbitSpec::make(w, support);
  const std::int64_t d_S = orbit.isotropy();
  const std::int64_t total = weight_sum(w);

  if (d_S == 1) {
    CZReport r = mu_principal(WPSpace{w});
    r.formula = kTheoremFormula;
    r.notes.push_back("trivial isotropy on the support: principal orbit");
    return r;
  }

  const std::size_t s_size = orbit.support().size();
  if (w.size() == 2 && s_size == 1) {
    const std::size_t j = orbit.support().front();
    const std::int64_t m = w[j];
    const std::int64_t n = w[1 - j];
    const std::int64_t index = transverse_term(checked_add(m, n), m);
    CZReport r{
        .index = index,
        .b_constant = total,
        .branch = Branch::TwoWeightSpecial,
        .extrapolated = false,
        .formula = kTwoWeightFormula,
        .notes = {"one-dimensional unitary path over P(" + std::to_string(w[0]) + "," +
                  std::to_string(w[1]) + "), isotropy Z_" + std::to_string(m)},
    };
    const std::int64_t general = checked_add(2, transverse_term(n, m));
    if (general != index) {
      r.notes.push_back("the general reduction formula would give " +
                        std::to_string(general) + " here");
    }
    return r;
  }

  bool extrapolated = false;
  std::vector<std::string> notes;
  if (s_size == 1) {
    if (!allow_extrapolation) {
      throw UncoveredCaseError(
          "support of size |S| = 1 in an ambient space with " + std::to_string(w.size()) +
          " weights is not covered; pass allow_extrapolation to use the reduction "
          "formula anyway");
    }
    extrapolated = true;
    notes.emplace_back("extrapolated: |S| = 1 with at least three ambient weights");
  }

  std::int64_t stratum = 0;
  for (auto j : orbit.support()) stratum = checked_add(stratum, w[j] / d_S);
  stratum = checked_mul(2, stratum);

  TransverseSum tr = transverse_sum(w.values(), orbit, allow_extrapolation);
  extrapolated = extrapolated || tr.extrapolated;
  notes.insert(notes.end(), tr.notes.begin(), tr.notes.end());
  notes.push_back("isotropy d_S = " + std::to_string(d_S) + ", stratum term " +
                  std::to_string(stratum) + ", transverse term " + std::to_string(tr.total));

  return CZReport{
      .index = checked_add(stratum, tr.total),
      .b_constant = total,
      .branch = Branch::NonprincipalWps,
      .extrapolated = extrapolated,
      .formula = kReductionFormula,
      .notes = std::move(notes),
  };
}

CZReport mu_orbit_brieskorn(const BrieskornExponents& a,
                            std::span<const std::int64_t> support,
                            bool allow_extrapolation) {
  const WCISpace x = brieskorn_to_wci(a);
  const OrbitSpec orbit = OrbitSpec::make(x.weights(), support);
  if (orbit.support().size() < 3) {
    throw UncoveredCaseError("Brieskorn strata need |S| >= 3 so that the restricted "
                             "polynomial is again of Brieskorn type; got |S| = " +
                             std::to_string(orbit.support().size()));
  }
  const std::int64_t b = b_constant(x);
  if (orbit.isotropy() == 1) {
    CZReport r = mu_principal_brieskorn(a);
    r.formula = kTheoremFormula;
    r.notes.push_back("trivial isotropy on the support: principal orbit");
    return r;
  }

  std::vector<std::int64_t> sub;
  for (auto j : orbit.support()) sub.push_back(a.exponents()[j]);
  const std::int64_t stratum = brieskorn_mu_formula(sub);

  TransverseSum tr = transverse_sum(x.weights().values(), orbit, allow_extrapolation);
  tr.notes.push_back("isotropy d_S = " + std::to_string(orbit.isotropy()) +
                     " from ambient weights (assumed to equal |Gamma_q|)");
  tr.notes.push_back("restricted Brieskorn mu_P = " + std::to_string(stratum) +
                     ", transverse term " + std::to_string(tr.total));
  return CZReport{
      .index = checked_add(stratum, tr.total),
      .b_constant = b,
      .branch = Branch::NonprincipalBrieskorn,
      .extrapolated = tr.extrapolated,
      .formula = kBrieskornReductionFormula,
      .notes = std::move(tr.notes),
  };
}

}  // namespace czorb
