/* kummergap: gap sets, Weierstrass semigroups and weight asymptotics at the
 * places of Kummer covers y^m = prod_k (x - a_k)^{lambda_k} of the line.
 *
 * Plain C interface over the C++ core. Objects are opaque handles created by
 * kg_*_create / returned through out-parameters and released with the
 * matching kg_*_free. Every fallible call returns a kg_status; on failure the
 * out-parameters are untouched and kg_last_error_message() describes the
 * problem (thread-local, valid until the next failing call on the thread).
 *
 * Place indices: 0 is the fiber over the pole of x, 1..r the fibers over the
 * roots a_1..a_r.
 */
#ifndef KUMMERGAP_H
#define KUMMERGAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KUMMERGAP_BUILDING)
#    define KG_API __declspec(dllexport)
#  else
#    define KG_API __declspec(dllimport)
#  endif
#else
#  define KG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kg_status {
  KG_OK = 0,
  KG_E_INVALID_ARGUMENT = 1,
  KG_E_NOT_SEMIGROUP = 2,
  KG_E_INVALID_BASE = 3,
  KG_E_NOT_TOTALLY_RAMIFIED = 4,
  KG_E_TOTALLY_RAMIFIED = 5,
  KG_E_RATIO_UNDEFINED = 6,
  KG_E_HYPOTHESIS_VIOLATED = 7,
  KG_E_OVERFLOW = 8,
  KG_E_INTERNAL = 9
} kg_status;

/* "OK", "INVALID_ARGUMENT", "NOT_TOTALLY_RAMIFIED", ... */
KG_API const char* kg_status_name(kg_status status);
KG_API const char* kg_last_error_message(void);
KG_API const char* kg_version(void);

typedef struct kg_rational {
  int64_t num;
  int64_t den; /* > 0, gcd(|num|, den) = 1 */
} kg_rational;

/* ---- integer lists ---------------------------------------------------- */

typedef struct kg_ints kg_ints;

KG_API size_t kg_ints_size(const kg_ints* list);
KG_API const int64_t* kg_ints_data(const kg_ints* list);
KG_API void kg_ints_free(kg_ints* list);

/* ---- numerical semigroups --------------------------------------------- */

typedef struct kg_semigroup kg_semigroup;

KG_API kg_status kg_semigroup_from_generators(const int64_t* gens, size_t count, kg_semigroup** out);
KG_API kg_status kg_semigroup_from_gaps(const int64_t* gaps, size_t count, kg_semigroup** out);
KG_API void kg_semigroup_free(kg_semigroup* h);

KG_API kg_status kg_semigroup_gaps(const kg_semigroup* h, kg_ints** out);
KG_API kg_status kg_semigroup_invariants(const kg_semigroup* h, int64_t* genus, int64_t* frobenius,
                                         int64_t* multiplicity);
KG_API kg_status kg_semigroup_contains(const kg_semigroup* h, int64_t n, int* out);
/* values indexed by residue 0..n-1 */
KG_API kg_status kg_semigroup_apery(const kg_semigroup* h, int64_t n, kg_ints** out);
KG_API kg_status kg_semigroup_generators_via_apery(const kg_semigroup* h, int64_t n, kg_ints** out);
KG_API kg_status kg_semigroup_minimal_generators(const kg_semigroup* h, kg_ints** out);
KG_API kg_status kg_semigroup_is_symmetric(const kg_semigroup* h, int* out);
KG_API kg_status kg_semigroup_is_symmetric_apery(const kg_semigroup* h, int64_t n, int* out);
/* 1 when both semigroups have the same gap set */
KG_API int kg_semigroup_equal(const kg_semigroup* a, const kg_semigroup* b);

/* ---- curves ----------------------------------------------------------- */

typedef struct kg_curve kg_curve;

KG_API kg_status kg_curve_create(int64_t m, const int64_t* lambdas, size_t r, kg_curve** out);
KG_API void kg_curve_free(kg_curve* curve);

KG_API int64_t kg_curve_m(const kg_curve* curve);
KG_API size_t kg_curve_r(const kg_curve* curve);
KG_API int64_t kg_curve_lambda0(const kg_curve* curve);
KG_API kg_status kg_curve_genus(const kg_curve* curve, int64_t* out);
/* gcd(m, lambda_s): the number of places over P_s */
KG_API kg_status kg_curve_fiber_size(const kg_curve* curve, size_t s, int64_t* out);
KG_API int kg_curve_all_coprime(const kg_curve* curve);
KG_API kg_status kg_curve_t_value(const kg_curve* curve, size_t s, int64_t i, int64_t* out);
KG_API kg_status kg_curve_beta0(const kg_curve* curve, int64_t i, int64_t* out);
KG_API kg_status kg_curve_beta_s(const kg_curve* curve, size_t s, int64_t i, int64_t* out);

/* ---- gap sets and Weierstrass semigroups ------------------------------ */

KG_API kg_status kg_gap_set(const kg_curve* curve, size_t s, kg_ints** out);
KG_API kg_status kg_gap_set_reference(const kg_curve* curve, size_t s, kg_ints** out);
/* *complete is 1 only where the subset is the full gap set (m = 2) */
KG_API kg_status kg_partial_gaps(const kg_curve* curve, size_t s, kg_ints** out, int* complete);
KG_API kg_status kg_generic_gaps(const kg_curve* curve, kg_ints** out, int* complete);
/* Apery set of H(Q_s) with respect to m, indexed by residue */
KG_API kg_status kg_weierstrass_apery(const kg_curve* curve, size_t s, kg_ints** out);
KG_API kg_status kg_weierstrass_generators(const kg_curve* curve, size_t s, kg_ints** out);
KG_API kg_status kg_weierstrass_semigroup(const kg_curve* curve, size_t s, kg_semigroup** out);

typedef struct kg_multiplicity_info {
  int64_t multiplicity;
  int has_frobenius; /* 0 for genus 0 */
  int64_t frobenius;
  int multiplicity_is_m_predicted; /* every beta0(i) >= 1 */
  int all_coprime;
  int has_relation;                    /* set when all_coprime */
  int64_t multiplicity_from_frobenius; /* min(m, m(r-1) - F) */
  int large_r_forces_m;                /* all_coprime and m <= r */
} kg_multiplicity_info;

KG_API kg_status kg_multiplicity_report(const kg_curve* curve, size_t s, kg_multiplicity_info* out);

typedef enum kg_symmetry_verdict {
  KG_SYM_SYMMETRIC = 0,
  KG_SYM_NOT_SYMMETRIC = 1,
  KG_SYM_SUFFICIENT_CONDITION_HOLDS = 2,
  KG_SYM_INCONCLUSIVE = 3
} kg_symmetry_verdict;

typedef enum kg_symmetry_criterion {
  KG_CRIT_NONE = 0,
  KG_CRIT_LAMBDAS_EQUAL = 1,
  KG_CRIT_OFF_PLACE_LAMBDAS_BALANCE = 2,
  KG_CRIT_LAMBDAS_DIVIDE_M = 3,
  KG_CRIT_COMPLEMENTS_DIVIDE_M = 4
} kg_symmetry_criterion;

KG_API kg_status kg_symmetry_predict(const kg_curve* curve, size_t s, kg_symmetry_verdict* verdict,
                                     kg_symmetry_criterion* criterion);
KG_API const char* kg_symmetry_verdict_name(kg_symmetry_verdict verdict);
KG_API const char* kg_symmetry_criterion_name(kg_symmetry_criterion criterion);

typedef struct kg_coincidence_info {
  int equal;
  int same_lambda;
  int infinity_balance;
  int trigonal_applicable;
  int trigonal_predicts_equal;
} kg_coincidence_info;

KG_API kg_status kg_gap_sets_coincide(const kg_curve* curve, size_t s1, size_t s2, kg_coincidence_info* out);

/* ---- differential divisors -------------------------------------------- */

typedef enum kg_anchor_kind { KG_ANCHOR_GENERIC = 0, KG_ANCHOR_ROOT = 1 } kg_anchor_kind;
typedef enum kg_fiber_kind { KG_FIBER_ROOT = 0, KG_FIBER_INFINITY = 1, KG_FIBER_EXTRA = 2 } kg_fiber_kind;

typedef struct kg_divisor kg_divisor;

typedef struct kg_divisor_entry {
  kg_fiber_kind kind;
  size_t index; /* root index for KG_FIBER_ROOT, else 0 */
  int64_t coefficient;
  int64_t fiber_size;
} kg_divisor_entry;

/* anchor_root is ignored for KG_ANCHOR_GENERIC */
KG_API kg_status kg_differential_divisor(const kg_curve* curve, kg_anchor_kind anchor, size_t anchor_root, int64_t i,
                                         int64_t j, kg_divisor** out);
KG_API void kg_divisor_free(kg_divisor* d);
KG_API size_t kg_divisor_size(const kg_divisor* d);
KG_API kg_status kg_divisor_entry_at(const kg_divisor* d, size_t index, kg_divisor_entry* out);
KG_API kg_status kg_divisor_degree(const kg_divisor* d, int64_t* out);
KG_API int kg_divisor_effective(const kg_divisor* d);

/* ---- weights and limits ----------------------------------------------- */

KG_API kg_status kg_weight(const int64_t* gaps, size_t count, int64_t genus, int64_t* out);
KG_API kg_status kg_bw(const kg_curve* curve, int64_t* out);
KG_API kg_status kg_bw_ratio(const kg_curve* curve, kg_rational* out);

typedef struct kg_profile kg_profile;

/* keys[k] -> densities[k]; absent units default to density 0 */
KG_API kg_status kg_profile_create(int64_t m, const int64_t* keys, const kg_rational* densities, size_t count,
                                   kg_profile** out);
KG_API kg_status kg_profile_of_curve(const kg_curve* curve, kg_profile** out);
KG_API void kg_profile_free(kg_profile* p);
KG_API int64_t kg_profile_m(const kg_profile* p);
KG_API size_t kg_profile_size(const kg_profile* p);
KG_API kg_status kg_profile_entry(const kg_profile* p, size_t index, int64_t* key, kg_rational* density);

KG_API kg_status kg_asymptotic_limit(const kg_profile* p, kg_rational* out);
KG_API kg_status kg_limit_bounds(int64_t m, kg_rational* lower, kg_rational* upper);

typedef struct kg_sweep kg_sweep;

typedef struct kg_sweep_row {
  int64_t r;
  int64_t genus;
  int skipped; /* genus <= 1; ratio and difference are 0/1 */
  kg_rational ratio;
  kg_rational limit;
  kg_rational difference;
} kg_sweep_row;

KG_API kg_status kg_convergence_sweep(int64_t m, const int64_t* pattern, size_t pattern_len, const int64_t* repeats,
                                      size_t repeats_len, kg_sweep** out);
KG_API void kg_sweep_free(kg_sweep* sweep);
KG_API size_t kg_sweep_size(const kg_sweep* sweep);
KG_API kg_status kg_sweep_row_at(const kg_sweep* sweep, size_t index, kg_sweep_row* out);

/* ---- invariant suite -------------------------------------------------- */

typedef struct kg_verify_report kg_verify_report;

typedef struct kg_verify_entry {
  const char* name;          /* owned by the report */
  const char* first_failure; /* "" when passed; owned by the report */
  int passed;
  uint64_t checked;
  uint64_t failures;
} kg_verify_entry;

KG_API kg_status kg_verify(uint64_t seed, size_t random_curves, kg_verify_report** out);
KG_API void kg_verify_free(kg_verify_report* report);
KG_API size_t kg_verify_size(const kg_verify_report* report);
KG_API kg_status kg_verify_entry_at(const kg_verify_report* report, size_t index, kg_verify_entry* out);
KG_API int kg_verify_all_passed(const kg_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* KUMMERGAP_H */
