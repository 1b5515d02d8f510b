#include "czorb/spaces.hpp"

#include <algorithm>
#include <functional>

#include "czorb/cz_indices.hpp"
#include "czorb/error.hpp"

namespace czorb {

WCISpace WCISpace::make(WeightVector weights, std::span<const std::int64_t> degrees) {
  const auto n = static_cast<std::int64_t>(weights.size()) - 1;
  const auto r = static_cast<std::int64_t>(degrees.size());
  if (r < 1 || r > n - 2) {
    throw DomainError("complete intersection needs 1 <= r <= n - 2; got r = " +
                      std::to_string(r) + ", n = " + std::to_string(n));
  }
  for (auto m : degrees) {
    if (m < 1) throw DomainError("degrees must be positive, got " + std::to_string(m));
  }
  return WCISpace(std::move(weights),
                  std::vector<std::int64_t>(degrees.begin(), degrees.end()));
}

std::int64_t compute_l2(std::span<const std::int64_t> a) {
  if (a.empty()) throw DomainError("l2 of an empty exponent list");
  for (auto x : a) {
    if (x < 2) throw DomainError("exponents must be >= 2, got " + std::to_string(x));
  }
  const Factorization fl = factorize(lcm_all(a));
  std::int64_t l2 = 1;
  std::vector<int> orders(a.size());
  for (const auto& [p, s] : fl.pairs()) {
    std::transform(a.begin(), a.end(), orders.begin(),
                   [p = p](std::int64_t x) { return ord_p(x, p); });
    std::sort(orders.begin(), orders.end(), std::greater<>());
    const int beta = orders.size() >= 2 ? orders[1] : 0;
    l2 = checked_mul(l2, ipow(p, beta));
  }
  return l2;
}

BrieskornExponents BrieskornExponents::make(std::span<const std::int64_t> a) {
  if (a.size() < 4) {
    throw DomainError("Brieskorn exponents need n >= 3 (at least 4 entries), got " +
                      std::to_string(a.size()));
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < 2) {
      throw DomainError("exponent a_" + std::to_string(j) + " = " +
                        std::to_string(a[j]) + " must be >= 2");
    }
  }
  return BrieskornExponents(std::vector<std::int64_t>(a.begin(), a.end()), lcm_all(a),
                            compute_l2(a));
}

WCISpace brieskorn_to_wci(const BrieskornExponents& a) {
  std::vector<std::int64_t> w;
  w.reserve(a.size());
  for (auto aj : a.exponents()) w.push_back(a.l() / aj);
  try {
    const std::int64_t degree = a.l();
    return WCISpace::make(WeightVector::make(w), std::span(&degree, 1));
  } catch (const Error& e) {
    throw InternalError(std::string("Brieskorn conversion produced invalid data: ") +
                        e.what());
  }
}

HypothesesReport check_theorem_hypotheses(const Space& space) {
  HypothesesReport report{
      .b_constant = b_constant(space),
      .first_chern = ConditionStatus::Satisfied,
      .simply_connected = ConditionStatus::Satisfied,
      .total_space_manifold = ConditionStatus::Assumed,
      .notes = {},
  };
  if (std::holds_alternative<WPSpace>(space)) {
    report.notes.emplace_back(
        "c1_orb = -|w| [omega]; orbifold pi_1 vanishes by the homotopy sequence of "
        "S^1 -> S^{2n+1} -> P(w)");
  } else {
    const auto& x = std::get<WCISpace>(space);
    const auto n = static_cast<std::int64_t>(x.weights().size()) - 1;
    const auto r = static_cast<std::int64_t>(x.degrees().size());
    report.simply_connected =
        r <= n - 2 ? ConditionStatus::Satisfied : ConditionStatus::Violated;
    report.notes.emplace_back("c1_orb = -(|w| - sum m_j) [omega]; link of dimension >= 2 "
                              "is simply connected since r = " +
                              std::to_string(r) + " <= n - 2 = " + std::to_string(n - 2));
  }
  report.notes.emplace_back(
      "total space is a manifold: assumed (quasi-smoothness is not checked)");
  return report;
}

const char* to_string(ConditionStatus s) noexcept {
  switch (s) {
    case ConditionStatus::Satisfied: return "satisfied";
    case ConditionStatus::Violated: return "violated";
    case ConditionStatus::Assumed: return "assumed";
  }
  return "unknown";
}

}  // namespace czorb
