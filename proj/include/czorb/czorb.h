/*
 * C interface to the czorb library.
 *
 * Every function returns a czorb_status. On failure, the thread-local
 * czorb_last_error_message() describes the problem and
 * czorb_last_error_value() carries the numeric payload of the error when it
 * has one (the common factor for CZORB_NOT_COPRIME, the achieved error
 * estimate for CZORB_CONVERGENCE, the residual for CZORB_RESOLUTION).
 *
 * Objects are opaque handles created by *_new functions and released with
 * the matching *_free. Free functions accept NULL.
 */
#ifndef CZORB_H
#define CZORB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CZORB_BUILDING)
#    define CZORB_API __declspec(dllexport)
#  else
#    define CZORB_API __declspec(dllimport)
#  endif
#else
#  define CZORB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum czorb_status {
  CZORB_OK = 0,
  CZORB_INVALID_ARGUMENT = 1, /* NULL pointer or buffer too small */
  CZORB_DOMAIN = 2,
  CZORB_NOT_COPRIME = 3,
  CZORB_OVERFLOW = 4,
  CZORB_UNCOVERED = 5,
  CZORB_CONVERGENCE = 6,
  CZORB_RESOLUTION = 7,
  CZORB_INTERNAL = 8
} czorb_status;

typedef struct czorb_rational {
  int64_t num;
  int64_t den; /* always >= 1, gcd(|num|, den) = 1 */
} czorb_rational;

CZORB_API const char* czorb_version(void);
CZORB_API const char* czorb_status_name(czorb_status status);
CZORB_API const char* czorb_last_error_message(void);
CZORB_API double czorb_last_error_value(void);

/* ---- exact arithmetic ------------------------------------------------- */

/* Writes up to `capacity` (prime, exponent) pairs; `*count` receives the
 * number of distinct primes even when the buffer is too small. */
CZORB_API czorb_status czorb_factorize(int64_t n, int64_t* primes, int32_t* exponents,
                                       size_t capacity, size_t* count);
CZORB_API czorb_status czorb_ord_p(int64_t n, int64_t p, int32_t* out);
CZORB_API czorb_status czorb_gcd_all(const int64_t* xs, size_t n, int64_t* out);
CZORB_API czorb_status czorb_lcm_all(const int64_t* xs, size_t n, int64_t* out);
CZORB_API czorb_status czorb_rational_make(int64_t num, int64_t den, czorb_rational* out);
CZORB_API czorb_status czorb_rational_parse(const char* text, czorb_rational* out);

/* ---- weight vectors ---------------------------------------------------- */

typedef struct czorb_weights czorb_weights;

CZORB_API czorb_status czorb_weights_new(const int64_t* w, size_t n, czorb_weights** out);
CZORB_API void czorb_weights_free(czorb_weights* w);
CZORB_API size_t czorb_weights_size(const czorb_weights* w);
CZORB_API czorb_status czorb_weights_values(const czorb_weights* w, int64_t* out,
                                            size_t capacity);

typedef struct czorb_weight_invariants czorb_weight_invariants;

CZORB_API czorb_status czorb_weights_invariants(const czorb_weights* w,
                                                czorb_weight_invariants** out);
CZORB_API void czorb_weight_invariants_free(czorb_weight_invariants* inv);
CZORB_API int64_t czorb_weight_invariants_sum(const czorb_weight_invariants* inv);
/* CZORB_OVERFLOW when ||w|| does not fit in int64. */
CZORB_API czorb_status czorb_weight_invariants_product(const czorb_weight_invariants* inv,
                                                      int64_t* out);
CZORB_API int64_t czorb_weight_invariants_a_w(const czorb_weight_invariants* inv);
CZORB_API int czorb_weight_invariants_well_formed(const czorb_weight_invariants* inv);
/* Each writes size() entries into `out`. */
CZORB_API czorb_status czorb_weight_invariants_d(const czorb_weight_invariants* inv,
                                                 int64_t* out, size_t capacity);
CZORB_API czorb_status czorb_weight_invariants_e(const czorb_weight_invariants* inv,
                                                 int64_t* out, size_t capacity);
CZORB_API czorb_status czorb_weight_invariants_reduced(const czorb_weight_invariants* inv,
                                                       int64_t* out, size_t capacity);

CZORB_API czorb_status czorb_symplectic_area(const czorb_weights* w, czorb_rational* out);
CZORB_API czorb_status czorb_fw_degree(const czorb_weights* w, int64_t* out);
CZORB_API czorb_status czorb_classifying_multiplier(const czorb_weights* w, int64_t* out);

/* ---- spaces ------------------------------------------------------------- */

typedef struct czorb_space czorb_space;
typedef struct czorb_brieskorn czorb_brieskorn;

CZORB_API czorb_status czorb_space_new_wps(const czorb_weights* w, czorb_space** out);
CZORB_API czorb_status czorb_space_new_wci(const czorb_weights* w, const int64_t* degrees,
                                           size_t r, czorb_space** out);
CZORB_API void czorb_space_free(czorb_space* s);
CZORB_API int czorb_space_is_wci(const czorb_space* s);
/* Weights of the ambient weighted projective space. The handle is owned by
 * the caller and must be freed. */
CZORB_API czorb_status czorb_space_weights(const czorb_space* s, czorb_weights** out);
CZORB_API size_t czorb_space_degree_count(const czorb_space* s);
CZORB_API czorb_status czorb_space_degrees(const czorb_space* s, int64_t* out,
                                           size_t capacity);

CZORB_API czorb_status czorb_brieskorn_new(const int64_t* a, size_t n, czorb_brieskorn** out);
CZORB_API void czorb_brieskorn_free(czorb_brieskorn* b);
CZORB_API int64_t czorb_brieskorn_l(const czorb_brieskorn* b);
CZORB_API int64_t czorb_brieskorn_l2(const czorb_brieskorn* b);
CZORB_API czorb_status czorb_brieskorn_to_wci(const czorb_brieskorn* b, czorb_space** out);
CZORB_API czorb_status czorb_compute_l2(const int64_t* a, size_t n, int64_t* out);

typedef enum czorb_condition {
  CZORB_CONDITION_SATISFIED = 0,
  CZORB_CONDITION_VIOLATED = 1,
  CZORB_CONDITION_ASSUMED = 2
} czorb_condition;

typedef struct czorb_hypotheses {
  int64_t b_constant;
  czorb_condition first_chern;
  czorb_condition simply_connected;
  czorb_condition total_space_manifold;
} czorb_hypotheses;

CZORB_API czorb_status czorb_check_hypotheses(const czorb_space* s, czorb_hypotheses* out);
CZORB_API const char* czorb_condition_name(czorb_condition c);

/* ---- Conley-Zehnder indices --------------------------------------------- */

typedef enum czorb_branch {
  CZORB_BRANCH_PRINCIPAL_WPS = 0,
  CZORB_BRANCH_PRINCIPAL_WCI = 1,
  CZORB_BRANCH_PRINCIPAL_BRIESKORN = 2,
  CZORB_BRANCH_NONPRINCIPAL_WPS = 3,
  CZORB_BRANCH_NONPRINCIPAL_BRIESKORN = 4,
  CZORB_BRANCH_TWO_WEIGHT_SPECIAL = 5
} czorb_branch;

typedef struct czorb_report czorb_report;

CZORB_API void czorb_report_free(czorb_report* r);
CZORB_API int64_t czorb_report_index(const czorb_report* r);
/* Returns 1 and writes `*out` when the report carries b. */
CZORB_API int czorb_report_b_constant(const czorb_report* r, int64_t* out);
CZORB_API czorb_branch czorb_report_branch(const czorb_report* r);
CZORB_API int czorb_report_extrapolated(const czorb_report* r);
CZORB_API const char* czorb_report_formula(const czorb_report* r);
CZORB_API size_t czorb_report_note_count(const czorb_report* r);
CZORB_API const char* czorb_report_note(const czorb_report* r, size_t i);
CZORB_API const char* czorb_branch_name(czorb_branch b);

CZORB_API czorb_status czorb_b_constant(const czorb_space* s, int64_t* out);
CZORB_API czorb_status czorb_mu_principal(const czorb_space* s, czorb_report** out);
CZORB_API czorb_status czorb_mu_principal_brieskorn(const czorb_brieskorn* b,
                                                    czorb_report** out);
CZORB_API czorb_status czorb_mu_orbit_wps(const czorb_weights* w, const int64_t* support,
                                          size_t n, int allow_extrapolation,
                                          czorb_report** out);
CZORB_API czorb_status czorb_mu_orbit_brieskorn(const czorb_brieskorn* b,
                                                const int64_t* support, size_t n,
                                                int allow_extrapolation, czorb_report** out);

/* ---- paths -------------------------------------------------------------- */

CZORB_API czorb_status czorb_scalar_cz(czorb_rational T, int64_t* out);
CZORB_API czorb_status czorb_scalar_cz_rated(czorb_rational rate, czorb_rational duration,
                                             int64_t* out);
CZORB_API czorb_status czorb_diagonal_cz(const czorb_rational* rates, size_t n,
                                         czorb_rational duration, int64_t* out);
CZORB_API czorb_status czorb_loop_cz_from_maslov(int64_t maslov, int64_t* out);
CZORB_API czorb_status czorb_crossing_oracle_scalar(czorb_rational T, int64_t* out);

typedef struct czorb_winding {
  int64_t winding;
  double residual;
  int64_t samples;
} czorb_winding;

CZORB_API czorb_status czorb_min_winding_samples(const int64_t* rates, size_t n,
                                                 int64_t* out);
CZORB_API czorb_status czorb_det_winding(const int64_t* rates, size_t n, int64_t samples,
                                         czorb_winding* out);

/* ---- teardrop ----------------------------------------------------------- */

typedef enum czorb_group_kind {
  CZORB_GROUP_TRIVIAL = 0,
  CZORB_GROUP_FREE = 1,
  CZORB_GROUP_CYCLIC = 2
} czorb_group_kind;

typedef struct czorb_group {
  czorb_group_kind kind;
  int64_t parameter; /* rank for FREE, order for CYCLIC, 0 for TRIVIAL */
} czorb_group;

CZORB_API czorb_status czorb_teardrop_homology(int64_t m, int64_t q, czorb_group* out);
CZORB_API czorb_status czorb_teardrop_cohomology(int64_t m, int64_t q, czorb_group* out);
CZORB_API czorb_status czorb_teardrop_orbifold_chern(int64_t m, czorb_rational* out);
CZORB_API czorb_status czorb_p_star_factor(int64_t m, czorb_rational* out);

/* ---- numeric verification ----------------------------------------------- */

typedef struct czorb_quadrature {
  double value;
  double estimated_error;
  int64_t evaluations;
} czorb_quadrature;

CZORB_API czorb_status czorb_chart_integral(int64_t w0, int64_t w1, double tol,
                                            int64_t eval_budget, czorb_quadrature* out);

typedef struct czorb_area_chain_steps {
  czorb_rational chart_value;
  int64_t group_order;
  czorb_rational local_value;
  czorb_rational inclusion_degree;
  czorb_rational area;
} czorb_area_chain_steps;

CZORB_API czorb_status czorb_area_chain(const czorb_weights* full_w,
                                        czorb_area_chain_steps* out);

#ifdef __cplusplus
}
#endif

#endif /* CZORB_H */
