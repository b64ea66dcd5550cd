#ifndef PFCOSET_PFCOSET_H
#define PFCOSET_PFCOSET_H

#include <stddef.h>

#if defined(PFC_BUILDING_LIBRARY)
#define PFC_API __attribute__((visibility("default")))
#else
#define PFC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Exact q-series calculus for admissible sl(2) levels k = u/v - 2 < 0, the
 * parafermion coset and its extension.
 *
 * Rationals cross the boundary as "a/b" strings. Strings returned through
 * char** out-parameters are owned by the caller and released with
 * pfc_string_free. Every function returning pfc_status records a message
 * retrievable with pfc_last_error (per thread) when it fails. */

typedef enum pfc_status {
  PFC_OK = 0,
  PFC_INVALID_ARGUMENT = 1,
  PFC_INVALID_LEVEL = 2,
  PFC_OUT_OF_KAC_TABLE = 3,
  PFC_PARITY_MISMATCH = 4,
  PFC_RANGE_ERROR = 5,
  PFC_TYPICAL_ON_ATYPICAL_WEIGHT = 6,
  PFC_NOT_LIFTABLE = 7,
  PFC_WEIGHT_NOT_IN_SUPPORT = 8,
  PFC_NONCONVERGENT_EVALUATION = 9,
  PFC_INSUFFICIENT_TRUNCATION = 10,
  PFC_TRUNCATION_BELOW_GROUND_STATE = 11,
  PFC_UNNORMALIZED_LABEL = 12,
  PFC_PARSE_ERROR = 13,
  PFC_INTERNAL_ERROR = 99
} pfc_status;

typedef struct pfc_level pfc_level;
typedef struct pfc_series pfc_series;

typedef enum pfc_route { PFC_ROUTE_PRIMARY = 0, PFC_ROUTE_CROSSCHECK = 1 } pfc_route;

PFC_API const char* pfc_last_error(void);
PFC_API const char* pfc_status_name(pfc_status status);
PFC_API void pfc_string_free(char* s);

/* ---- levels ------------------------------------------------------------ */

PFC_API pfc_status pfc_level_create(long u, long v, pfc_level** out);
PFC_API void pfc_level_destroy(pfc_level* level);
/* {"u","v","k","t","w","p","c_affine","c_coset","c_virasoro"} */
PFC_API pfc_status pfc_level_info_json(const pfc_level* level, char** out);
/* Canonical Kac table with conformal weights. */
PFC_API pfc_status pfc_kac_json(const pfc_level* level, char** out);
/* extended = 0: coset families; 1: irreducible extended modules. */
PFC_API pfc_status pfc_enumerate_json(const pfc_level* level, int extended, char** out);

/* ---- series ------------------------------------------------------------ */

PFC_API void pfc_series_destroy(pfc_series* s);
PFC_API pfc_status pfc_series_to_json(const pfc_series* s, char** out);
PFC_API pfc_status pfc_series_from_json(const char* json, pfc_series** out);
PFC_API pfc_status pfc_series_to_text(const pfc_series* s, char** out);
/* "exponent,coefficient" lines under a header row. */
PFC_API pfc_status pfc_series_to_csv(const pfc_series* s, char** out);
PFC_API pfc_status pfc_series_add(const pfc_series* a, const pfc_series* b, pfc_series** out);
PFC_API int pfc_series_equal(const pfc_series* a, const pfc_series* b);
/* {"re","im","tail_bound"} as decimal strings with `digits` digits. */
PFC_API pfc_status pfc_series_eval_json(const pfc_series* s, const char* tau_re, const char* tau_im, int digits,
                                        char** out);

/* Character of a coset label ("C[0;1]") or an extended label ("B.C[0;1]"),
 * exact to `order`. */
PFC_API pfc_status pfc_character(const pfc_level* level, const char* label, const char* order, pfc_route route,
                                 pfc_series** out);
/* Any label, including affine ones, whose characters are returned as
 * weight components over a window of `window` weights centred near 0. */
PFC_API pfc_status pfc_character_json(const pfc_level* level, const char* label, const char* order, pfc_route route,
                                      int window, char** out);
/* theta_{mu+L}, or its normalized derivative when deriv != 0. */
PFC_API pfc_status pfc_theta(const pfc_level* level, const char* mu, const char* order, int deriv, pfc_series** out);
PFC_API pfc_status pfc_gamma(const pfc_level* level, const char* mu, long r, const char* order, pfc_series** out);

/* ---- fusion ------------------------------------------------------------ */

/* Genuine fusion: one factor must be of C type (coset, extended) or L type
 * (affine). Inputs are canonicalized first. */
PFC_API pfc_status pfc_fuse_json(const pfc_level* level, const char* a, const char* b, char** out);
/* Grothendieck product of any two labels of the same space. */
PFC_API pfc_status pfc_gfuse_json(const pfc_level* level, const char* a, const char* b, char** out);

/* ---- modular data ------------------------------------------------------ */

/* kind: "typ", "theta", "vir", "gamma" or "gamma-stated". */
PFC_API pfc_status pfc_smatrix_json(const pfc_level* level, const char* kind, int digits, char** out);
/* B_k index list, its closed-form size and the rank of the Gamma functions. */
PFC_API pfc_status pfc_basis_json(const pfc_level* level, const char* order, char** out);
PFC_API pfc_status pfc_rep_dimension(const pfc_level* level, long* standard_count, long* gamma_dim_bound,
                                     long* total);

typedef struct pfc_verify_options {
  const char* order;        /* default "60" */
  int digits;               /* default 80 */
  const char* tol;          /* default "1e-20" */
  int window;               /* default 9 */
  const char* const* taus;  /* "re,im" strings; default {"0,1"} */
  size_t n_taus;
  int stated_gamma_table;   /* 1: fixed-rule A coefficients for gamma_s */
} pfc_verify_options;

PFC_API void pfc_verify_options_init(pfc_verify_options* opt);
/* kind: theta-s, std-s, gamma-s, t, lemma, resolutions, twistrules, two-route
 * (underscores accepted). *pass is set to 1 or 0. */
PFC_API pfc_status pfc_verify_json(const pfc_level* level, const char* kind, const pfc_verify_options* opt, int* pass,
                                   char** out);

#ifdef __cplusplus
}
#endif

#endif
