#ifndef LGMIRROR_H
#define LGMIRROR_H

/* C interface to the lgmirror library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function.  Every function returning lgm_status leaves a message for
 * lgm_last_error() on failure (per thread).  Strings returned through char**
 * are heap-allocated and released with lgm_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define LGM_API __declspec(dllexport)
#elif defined(LGM_BUILDING)
#  define LGM_API __attribute__((visibility("default")))
#else
#  define LGM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LGM_OK = 0,
  LGM_ERR_SYNTAX = 1,
  LGM_ERR_NOT_SQUARE,
  LGM_ERR_NOT_INVERTIBLE,
  LGM_ERR_NOT_A_SYMMETRY,
  LGM_ERR_NOT_A_SUBGROUP,
  LGM_ERR_NOT_CONTAINING_G0,
  LGM_ERR_NON_INTEGRAL_DOLGACHEV,
  LGM_ERR_NOT_SL,
  LGM_ERR_NOT_SYMMETRY_OF_CUSP,
  LGM_ERR_NON_INTEGRAL_GAMMA,
  LGM_ERR_NOT_POLYNOMIAL,
  LGM_ERR_NOT_GRADED,
  LGM_ERR_NOT_REDUCED,
  LGM_ERR_NOT_BRIESKORN_PHAM,
  LGM_ERR_MOEBIUS_INCONSISTENT,
  LGM_ERR_NON_INTEGRAL_TRACE,
  LGM_ERR_INVALID_ARGUMENT,
  LGM_ERR_NULL_ARGUMENT = 100,
  LGM_ERR_INTERNAL = 101
} lgm_status;

typedef enum { LGM_FORMAT_TEXT = 0, LGM_FORMAT_JSON = 1, LGM_FORMAT_CSV = 2 } lgm_format;

typedef struct lgm_poly lgm_poly;
typedef struct lgm_group lgm_group;

#define LGM_MAX_ORDERS 32

/* Numeric core of a mirror report; lists are sorted with ones omitted. */
typedef struct {
  int64_t genus;
  int64_t junior;
  int64_t stringy_euler;
  int64_t milnor;
  int64_t dolgachev[LGM_MAX_ORDERS];
  size_t n_dolgachev;
  int64_t gabrielov[LGM_MAX_ORDERS];
  size_t n_gabrielov;
  int64_t gamma_prime[3];
  int a_eq_gamma;
  int g_eq_j;
  int e_eq_mu;
} lgm_mirror_values;

LGM_API const char* lgm_version(void);
LGM_API const char* lgm_last_error(void);
LGM_API const char* lgm_status_name(lgm_status status);
LGM_API void lgm_string_free(char* s);
LGM_API lgm_status lgm_parse_format(const char* name, lgm_format* out);

/* Polynomials.  nvars = 0 infers the variable count from the text. */
LGM_API lgm_status lgm_poly_parse(const char* text, int nvars, lgm_poly** out);
LGM_API void lgm_poly_free(lgm_poly* f);
LGM_API int lgm_poly_nvars(const lgm_poly* f);
/* 1 when every coefficient is 1; invariants ignore coefficients either way. */
LGM_API int lgm_poly_unit_coefficients(const lgm_poly* f);
LGM_API lgm_status lgm_poly_exponent(const lgm_poly* f, int row, int col, int64_t* out);
LGM_API lgm_status lgm_poly_transpose(const lgm_poly* f, lgm_poly** out);
LGM_API lgm_status lgm_poly_to_string(const lgm_poly* f, char** out);
/* w must hold nvars entries; reduced != 0 selects the reduced system. */
LGM_API lgm_status lgm_poly_weights(const lgm_poly* f, int reduced, int64_t* w, int64_t* d, int64_t* cf);

/* Groups of diagonal symmetries of f: "G0", "Gfin", "trivial", "index:k",
 * "G0+<gens>" or generators such as "1/5(1,3,1);(1/2,1/2,0)". */
LGM_API lgm_status lgm_group_parse(const lgm_poly* f, const char* spec, lgm_group** out);
LGM_API void lgm_group_free(lgm_group* G);
LGM_API int64_t lgm_group_order(const lgm_group* G);
LGM_API lgm_status lgm_group_to_string(const lgm_group* G, char** out);
LGM_API lgm_status lgm_group_junior(const lgm_group* G, int64_t* out);
/* G^T as a group of symmetries of f^T. */
LGM_API lgm_status lgm_group_dual(const lgm_poly* f, const lgm_group* G, lgm_group** out);

LGM_API lgm_status lgm_mirror(const lgm_poly* f, const lgm_group* G, lgm_mirror_values* out);

/* Report producers behind the command line tool.  *verdict is 0 when every
 * check in the report holds and 1 otherwise; it may be NULL. */
LGM_API lgm_status lgm_report_analyze(const lgm_poly* f, const lgm_group* G, lgm_format fmt, char** out,
                                      int* verdict);
LGM_API lgm_status lgm_report_transpose(const lgm_poly* f, lgm_format fmt, char** out);
LGM_API lgm_status lgm_report_dual(const lgm_poly* f, const lgm_group* G, lgm_format fmt, char** out);
LGM_API lgm_status lgm_report_dolgachev(const lgm_poly* f, const lgm_group* G, lgm_format fmt, char** out);
/* H acts on the cusp x^g1+y^g2+z^g3-xyz attached to f (H may be NULL). */
LGM_API lgm_status lgm_report_gabrielov(const lgm_poly* f, const lgm_group* H, lgm_format fmt, char** out);
/* H = NULL gives the characteristic polynomial of f from the weight route. */
LGM_API lgm_status lgm_report_charpoly(const lgm_poly* f, const lgm_group* H, lgm_format fmt, char** out);
LGM_API lgm_status lgm_report_poincare(const lgm_poly* f, const lgm_group* G, lgm_format fmt, char** out,
                                       int* verdict);

LGM_API lgm_status lgm_verify_catalog(lgm_format fmt, char** out, int* verdict);
/* types: comma separated subset of I,II,III,IV,V or NULL for all; threads = 0 is automatic. */
LGM_API lgm_status lgm_verify_corpus(int64_t max_det, int64_t max_exp, const char* types, unsigned threads,
                                     lgm_format fmt, char** out, int* verdict);
LGM_API lgm_status lgm_catalog_list(lgm_format fmt, char** out);
LGM_API lgm_status lgm_catalog_check(const char* id, lgm_format fmt, char** out, int* verdict);
/* with_reports != 0 emits one mirror report per (f,G) pair. */
LGM_API lgm_status lgm_enumerate(int64_t max_det, int64_t max_exp, const char* types, int with_reports,
                                 lgm_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif
