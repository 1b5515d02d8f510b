// extern "C" surface over the C++ core. Exceptions never cross this boundary.

#include <algorithm>
#include <string>

#include "czorb/cz_indices.hpp"
#include "czorb/cz_paths.hpp"
#include "czorb/czorb.h"
#include "czorb/error.hpp"
#include "czorb/numeric_verify.hpp"
#include "czorb/orbifold_topology.hpp"
#include "czorb/spaces.hpp"
#include "czorb/weights.hpp"

struct czorb_weights {
  czorb::WeightVector value;
};

struct czorb_weight_invariants {
  czorb::WeightInvariants value;
};

struct czorb_space {
  czorb::Space value;
};

struct czorb_brieskorn {
  czorb::BrieskornExponents value;
};

struct czorb_report {
  czorb::CZReport value;
};

namespace {

thread_local std::string g_last_message;
thread_local double g_last_value = 0.0;

czorb_status fail(czorb_status status, std::string message, double value = 0.0) {
  g_last_message = std::move(message);
  g_last_value = value;
  return status;
}

czorb_status status_of(czorb::ErrorKind kind) {
  using czorb::ErrorKind;
  switch (kind) {
    case ErrorKind::Domain: return CZORB_DOMAIN;
    case ErrorKind::NotCoprime: return CZORB_NOT_COPRIME;
    case ErrorKind::Overflow: return CZORB_OVERFLOW;
    case ErrorKind::UncoveredCase: return CZORB_UNCOVERED;
    case ErrorKind::Convergence: return CZORB_CONVERGENCE;
    case ErrorKind::Resolution: return CZORB_RESOLUTION;
    case ErrorKind::Internal: return CZORB_INTERNAL;
  }
  return CZORB_INTERNAL;
}

template <typename F>
czorb_status guarded(F&& body) {
  try {
    body();
    g_last_message.clear();
    g_last_value = 0.0;
    return CZORB_OK;
  } catch (const czorb::NotCoprimeError& e) {
    return fail(CZORB_NOT_COPRIME, e.what(), static_cast<double>(e.gcd()));
  } catch (const czorb::ConvergenceError& e) {
    return fail(CZORB_CONVERGENCE, e.what(), e.achieved_error());
  } catch (const czorb::ResolutionError& e) {
    return fail(CZORB_RESOLUTION, e.what(), e.residual());
  } catch (const czorb::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CZORB_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CZORB_INTERNAL, e.what());
  }
}

#define CZORB_REQUIRE(cond)                                              \
  do {                                                                   \
    if (!(cond)) return fail(CZORB_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

std::span<const std::int64_t> view(const int64_t* xs, size_t n) {
  return {xs, n};
}

czorb_rational to_c(const czorb::Rational& r) { return {r.num(), r.den()}; }

czorb::Rational from_c(czorb_rational r) { return czorb::Rational(r.num, r.den); }

czorb_status copy_out(std::span<const std::int64_t> src, int64_t* out, size_t capacity) {
  if (out == nullptr || capacity < src.size()) {
    return fail(CZORB_INVALID_ARGUMENT,
                "output buffer needs " + std::to_string(src.size()) + " entries");
  }
  std::copy(src.begin(), src.end(), out);
  return CZORB_OK;
}

czorb_group to_c(const czorb::AbelianGroup& g) {
  using Kind = czorb::AbelianGroup::Kind;
  czorb_group out{CZORB_GROUP_TRIVIAL, g.parameter()};
  if (g.kind() == Kind::Free) out.kind = CZORB_GROUP_FREE;
  if (g.kind() == Kind::Cyclic) out.kind = CZORB_GROUP_CYCLIC;
  return out;
}

czorb_condition to_c(czorb::ConditionStatus s) {
  switch (s) {
    case czorb::ConditionStatus::Satisfied: return CZORB_CONDITION_SATISFIED;
    case czorb::ConditionStatus::Violated: return CZORB_CONDITION_VIOLATED;
    case czorb::ConditionStatus::Assumed: return CZORB_CONDITION_ASSUMED;
  }
  return CZORB_CONDITION_ASSUMED;
}

}  // namespace

extern "C" {

const char* czorb_version(void) { return "1.0.0"; }

const char* czorb_status_name(czorb_status status) {
  switch (status) {
    case CZORB_OK: return "ok";
    case CZORB_INVALID_ARGUMENT: return "invalid-argument";
    case CZORB_DOMAIN: return "domain";
    case CZORB_NOT_COPRIME: return "not-coprime";
    case CZORB_OVERFLOW: return "overflow";
    case CZORB_UNCOVERED: return "uncovered-case";
    case CZORB_CONVERGENCE: return "convergence";
    case CZORB_RESOLUTION: return "resolution";
    case CZORB_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* czorb_last_error_message(void) { return g_last_message.c_str(); }

double czorb_last_error_value(void) { return g_last_value; }

// exact arithmetic

czorb_status czorb_factorize(int64_t n, int64_t* primes, int32_t* exponents,
                             size_t capacity, size_t* count) {
  CZORB_REQUIRE(count != nullptr);
  czorb::Factorization f;
  czorb_status st = guarded([&] { f = czorb::factorize(n); });
  if (st != CZORB_OK) return st;
  *count = f.pairs().size();
  if (capacity < f.pairs().size() || (capacity > 0 && (!primes || !exponents))) {
    return fail(CZORB_INVALID_ARGUMENT,
                "factorization needs " + std::to_string(f.pairs().size()) + " slots");
  }
  for (size_t i = 0; i < f.pairs().size(); ++i) {
    primes[i] = f.pairs()[i].prime;
    exponents[i] = f.pairs()[i].exponent;
  }
  return CZORB_OK;
}

czorb_status czorb_ord_p(int64_t n, int64_t p, int32_t* out) {
  CZORB_REQUIRE(out != nullptr);
  return guarded([&] { *out = czorb::ord_p(n, p); });
}

czorb_status czorb_gcd_all(const int64_t* xs, size_t n, int64_t* out) {
  CZORB_REQUIRE(out != nullptr && (xs != nullptr || n == 0));
  return guarded([&] { *out = czorb::gcd_all(view(xs, n)); });
}

czorb_status czorb_lcm_all(const int64_t* xs, size_t n, int64_t* out) {
  CZORB_REQUIRE(out != nullptr && (xs != nullptr || n == 0));
  return guarded([&] { *out = czorb::lcm_all(view(xs, n)); });
}

czorb_status czorb_rational_make(int64_t num, int64_t den, czorb_rational* out) {
  CZORB_REQUIRE(out != nullptr);
  return guarded([&] { *out = to_c(czorb::Rational(num, den)); });
}

czorb_status czorb_rational_parse(const char* text, czorb_rational* out) {
  CZORB_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] { *out = to_c(czorb::Rational::parse(text)); });
}

// weights

czorb_status czorb_weights_new(const int64_t* w, size_t n, czorb_weights** out) {
  CZORB_REQUIRE(out != nullptr && (w != nullptr || n == 0));
  *out = nullptr;
  return guarded([&] { *out = new czorb_weights{czorb::WeightVector::make(view(w, n))}; });
}

void czorb_weights_free(czorb_weights* w) { delete w; }

size_t czorb_weights_size(const czorb_weights* w) { return w ? w->value.size() : 0; }

czorb_status czorb_weights_values(const czorb_weights* w, int64_t* out, size_t capacity) {
  CZORB_REQUIRE(w != nullptr);
  return copy_out(w->value.values(), out, capacity);
}

czorb_status czorb_weights_invariants(const czorb_weights* w, czorb_weight_invariants** out) {
  CZORB_REQUIRE(w != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new czorb_weight_invariants{czorb::invariants(w->value)}; });
}

void czorb_weight_invariants_free(czorb_weight_invariants* inv) { delete inv; }

int64_t czorb_weight_invariants_sum(const czorb_weight_invariants* inv) {
  return inv ? inv->value.sum : 0;
}

czorb_status czorb_weight_invariants_product(const czorb_weight_invariants* inv,
                                            int64_t* out) {
  CZORB_REQUIRE(inv != nullptr && out != nullptr);
  return guarded([&] {
    if (!inv->value.product) throw czorb::OverflowError("weight product exceeds int64");
    *out = *inv->value.product;
  });
}

int64_t czorb_weight_invariants_a_w(const czorb_weight_invariants* inv) {
  return inv ? inv->value.a_w : 0;
}

int czorb_weight_invariants_well_formed(const czorb_weight_invariants* inv) {
  return inv && inv->value.well_formed ? 1 : 0;
}

czorb_status czorb_weight_invariants_d(const czorb_weight_invariants* inv, int64_t* out,
                                       size_t capacity) {
  CZORB_REQUIRE(inv != nullptr);
  return copy_out(inv->value.d, out, capacity);
}

czorb_status czorb_weight_invariants_e(const czorb_weight_invariants* inv, int64_t* out,
                                       size_t capacity) {
  CZORB_REQUIRE(inv != nullptr);
  return copy_out(inv->value.e, out, capacity);
}

czorb_status czorb_weight_invariants_reduced(const czorb_weight_invariants* inv,
                                             int64_t* out, size_t capacity) {
  CZORB_REQUIRE(inv != nullptr);
  return copy_out(inv->value.reduced.values(), out, capacity);
}

czorb_status czorb_symplectic_area(const czorb_weights* w, czorb_rational* out) {
  CZORB_REQUIRE(w != nullptr && out != nullptr);
  return guarded([&] { *out = to_c(czorb::symplectic_area(w->value)); });
}

czorb_status czorb_fw_degree(const czorb_weights* w, int64_t* out) {
  CZORB_REQUIRE(w != nullptr && out != nullptr);
  return guarded([&] { *out = czorb::fw_degree(w->value); });
}

czorb_status czorb_classifying_multiplier(const czorb_weights* w, int64_t* out) {
  CZORB_REQUIRE(w != nullptr && out != nullptr);
  return guarded([&] { *out = czorb::classifying_multiplier(w->value); });
}

// spaces

czorb_status czorb_space_new_wps(const czorb_weights* w, czorb_space** out) {
  CZORB_REQUIRE(w != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new czorb_space{czorb::WPSpace{w->value}}; });
}

czorb_status czorb_space_new_wci(const czorb_weights* w, const int64_t* degrees, size_t r,
                                 czorb_space** out) {
  CZORB_REQUIRE(w != nullptr && out != nullptr && (degrees != nullptr || r == 0));
  *out = nullptr;
  return guarded([&] {
    *out = new czorb_space{czorb::WCISpace::make(w->value, view(degrees, r))};
  });
}

void czorb_space_free(czorb_space* s) { delete s; }

int czorb_space_is_wci(const czorb_space* s) {
  return s && std::holds_alternative<czorb::WCISpace>(s->value) ? 1 : 0;
}

czorb_status czorb_space_weights(const czorb_space* s, czorb_weights** out) {
  CZORB_REQUIRE(s != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] {
    if (const auto* p = std::get_if<czorb::WPSpace>(&s->value)) {
      *out = new czorb_weights{p->weights};
    } else {
      *out = new czorb_weights{std::get<czorb::WCISpace>(s->value).weights()};
    }
  });
}

size_t czorb_space_degree_count(const czorb_space* s) {
  if (!s) return 0;
  const auto* x = std::get_if<czorb::WCISpace>(&s->value);
  return x ? x->degrees().size() : 0;
}

czorb_status czorb_space_degrees(const czorb_space* s, int64_t* out, size_t capacity) {
  CZORB_REQUIRE(s != nullptr);
  const auto* x = std::get_if<czorb::WCISpace>(&s->value);
  if (!x) return CZORB_OK;
  return copy_out(x->degrees(), out, capacity);
}

czorb_status czorb_brieskorn_new(const int64_t* a, size_t n, czorb_brieskorn** out) {
  CZORB_REQUIRE(out != nullptr && (a != nullptr || n == 0));
  *out = nullptr;
  return guarded(
      [&] { *out = new czorb_brieskorn{czorb::BrieskornExponents::make(view(a, n))}; });
}

void czorb_brieskorn_free(czorb_brieskorn* b) { delete b; }

int64_t czorb_brieskorn_l(const czorb_brieskorn* b) { return b ? b->value.l() : 0; }

int64_t czorb_brieskorn_l2(const czorb_brieskorn* b) { return b ? b->value.l2() : 0; }

czorb_status czorb_brieskorn_to_wci(const czorb_brieskorn* b, czorb_space** out) {
  CZORB_REQUIRE(b != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new czorb_space{czorb::brieskorn_to_wci(b->value)}; });
}

czorb_status czorb_compute_l2(const int64_t* a, size_t n, int64_t* out) {
  CZORB_REQUIRE(out != nullptr && (a != nullptr || n == 0));
  return guarded([&] { *out = czorb::compute_l2(view(a, n)); });
}

czorb_status czorb_check_hypotheses(const czorb_space* s, czorb_hypotheses* out) {
  CZORB_REQUIRE(s != nullptr && out != nullptr);
  return guarded([&] {
    const auto h = czorb::check_theorem_hypotheses(s->value);
    *out = {h.b_constant, to_c(h.first_chern), to_c(h.simply_connected),
            to_c(h.total_space_manifold)};
  });
}

const char* czorb_condition_name(czorb_condition c) {
  switch (c) {
    case CZORB_CONDITION_SATISFIED: return "satisfied";
    case CZORB_CONDITION_VIOLATED: return "violated";
    case CZORB_CONDITION_ASSUMED: return "assumed";
  }
  return "unknown";
}

// CZ indices

void czorb_report_free(czorb_report* r) { delete r; }

int64_t czorb_report_index(const czorb_report* r) { return r ? r->value.index : 0; }

int czorb_report_b_constant(const czorb_report* r, int64_t* out) {
  if (!r || !r->value.b_constant) return 0;
  if (out) *out = *r->value.b_constant;
  return 1;
}

czorb_branch czorb_report_branch(const czorb_report* r) {
  return static_cast<czorb_branch>(r ? static_cast<int>(r->value.branch) : 0);
}

int czorb_report_extrapolated(const czorb_report* r) {
  return r && r->value.extrapolated ? 1 : 0;
}

const char* czorb_report_formula(const czorb_report* r) {
  return r ? r->value.formula.c_str() : "";
}

size_t czorb_report_note_count(const czorb_report* r) {
  return r ? r->value.notes.size() : 0;
}

const char* czorb_report_note(const czorb_report* r, size_t i) {
  if (!r || i >= r->value.notes.size()) return nullptr;
  return r->value.notes[i].c_str();
}

const char* czorb_branch_name(czorb_branch b) {
  return czorb::to_string(static_cast<czorb::Branch>(b));
}

czorb_status czorb_b_constant(const czorb_space* s, int64_t* out) {
  CZORB_REQUIRE(s != nullptr && out != nullptr);
  return guarded([&] { *out = czorb::b_constant(s->value); });
}

czorb_status czorb_mu_principal(const czorb_space* s, czorb_report** out) {
  CZORB_REQUIRE(s != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new czorb_report{czorb::mu_principal(s->value)}; });
}

czorb_status czorb_mu_principal_brieskorn(const czorb_brieskorn* b, czorb_report** out) {
  CZORB_REQUIRE(b != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new czorb_report{czorb::mu_principal_brieskorn(b->value)}; });
}

czorb_status czorb_mu_orbit_wps(const czorb_weights* w, const int64_t* support, size_t n,
                                int allow_extrapolation, czorb_report** out) {
  CZORB_REQUIRE(w != nullptr && out != nullptr && (support != nullptr || n == 0));
  *out = nullptr;
  return guarded([&] {
    *out = new czorb_report{
        czorb::mu_orbit_wps(w->value, view(support, n), allow_extrapolation != 0)};
  });
}

czorb_status czorb_mu_orbit_brieskorn(const czorb_brieskorn* b, const int64_t* support,
                                      size_t n, int allow_extrapolation, czorb_report** out) {
  CZORB_REQUIRE(b != nullptr && out != nullptr && (support != nullptr || n == 0));
  *out = nullptr;
  return guarded([&] {
    *out = new czorb_report{
        czorb::mu_orbit_brieskorn(b->value, view(support, n), allow_extrapolation != 0)};
  });
}

// paths

czorb_status czorb_scalar_cz(czorb_rational T, int64_t* out) {
  CZORB_REQUIRE(out != nullptr);
  return guarded([&] { *out = czorb::scalar_cz(from_c(T)); });
}

czorb_status czorb_scalar_cz_rated(czorb_rational rate, czorb_rational duration,
                                   int64_t* out) {
  CZORB_REQUIRE(out != nullptr);
  return guarded(
      [&] { *out = czorb::scalar_cz_rated({from_c(rate), from_c(duration)}); });
}

czorb_status czorb_diagonal_cz(const czorb_rational* rates, size_t n,
                               czorb_rational duration, int64_t* out) {
  CZORB_REQUIRE(out != nullptr && (rates != nullptr || n == 0));
  return guarded([&] {
    std::vector<czorb::Rational> rs;
    rs.reserve(n);
    for (size_t i = 0; i < n; ++i) rs.push_back(from_c(rates[i]));
    *out = czorb::diagonal_cz(czorb::DiagonalPath::from_rates(rs, from_c(duration)));
  });
}

czorb_status czorb_loop_cz_from_maslov(int64_t maslov, int64_t* out) {
  CZORB_REQUIRE(out != nullptr);
  return guarded([&] { *out = czorb::loop_cz_from_maslov(maslov); });
}

czorb_status czorb_crossing_oracle_scalar(czorb_rational T, int64_t* out) {
  CZORB_REQUIRE(out != nullptr);
  return guarded([&] { *out = czorb::crossing_oracle_scalar(from_c(T)); });
}

czorb_status czorb_min_winding_samples(const int64_t* rates, size_t n, int64_t* out) {
  CZORB_REQUIRE(out != nullptr && (rates != nullptr || n == 0));
  return guarded([&] { *out = czorb::min_winding_samples(view(rates, n)); });
}

czorb_status czorb_det_winding(const int64_t* rates, size_t n, int64_t samples,
                               czorb_winding* out) {
  CZORB_REQUIRE(out != nullptr && (rates != nullptr || n == 0));
  return guarded([&] {
    const auto r = czorb::det_winding(view(rates, n), samples);
    *out = {r.winding, r.residual, r.samples};
  });
}

// teardrop

czorb_status czorb_teardrop_homology(int64_t m, int64_t q, czorb_group* out) {
  CZORB_REQUIRE(out != nullptr);
  return guarded([&] { *out = to_c(czorb::teardrop_homology(m, q)); });
}

czorb_status czorb_teardrop_cohomology(int64_t m, int64_t q, czorb_group* out) {
  CZORB_REQUIRE(out != nullptr);
  return guarded([&] { *out = to_c(czorb::teardrop_cohomology(m, q)); });
}

czorb_status czorb_teardrop_orbifold_chern(int64_t m, czorb_rational* out) {
  CZORB_REQUIRE(out != nullptr);
  return guarded([&] { *out = to_c(czorb::teardrop_orbifold_chern(m)); });
}

czorb_status czorb_p_star_factor(int64_t m, czorb_rational* out) {
  CZORB_REQUIRE(out != nullptr);
  return guarded([&] { *out = to_c(czorb::p_star_factor(m)); });
}

// numeric verification

czorb_status czorb_chart_integral(int64_t w0, int64_t w1, double tol, int64_t eval_budget,
                                  czorb_quadrature* out) {
  CZORB_REQUIRE(out != nullptr);
  return guarded([&] {
    const auto q = czorb::chart_integral(
        w0, w1, tol, eval_budget > 0 ? eval_budget : czorb::kDefaultEvalBudget);
    *out = {q.value, q.estimated_error, q.evaluations};
  });
}

czorb_status czorb_area_chain(const czorb_weights* full_w, czorb_area_chain_steps* out) {
  CZORB_REQUIRE(full_w != nullptr && out != nullptr);
  return guarded([&] {
    const auto c = czorb::area_chain_steps(full_w->value);
    *out = {to_c(c.chart_value), c.group_order, to_c(c.local_value),
            to_c(c.inclusion_degree), to_c(c.area)};
  });
}

}  // extern "C"
