/* C interface to the bdsym library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a bdsym_status; on
 * failure bdsym_last_error() describes the problem (thread-local, valid until
 * the next failing call on the same thread). Strings returned through char**
 * are heap-allocated and released with bdsym_string_free.
 *
 * States are passed as canonical indices: coordinate 1 is the most
 * significant of the n low bits.
 */
#ifndef BDSYM_H
#define BDSYM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BDSYM_BUILDING)
#    define BDSYM_API __declspec(dllexport)
#  else
#    define BDSYM_API __declspec(dllimport)
#  endif
#else
#  define BDSYM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bdsym_status {
  BDSYM_OK = 0,
  BDSYM_E_BAD_SYNTAX,
  BDSYM_E_MISSING_ROW,
  BDSYM_E_DUPLICATE_ROW,
  BDSYM_E_DIMENSION_MISMATCH,
  BDSYM_E_NOT_BIJECTIVE,
  BDSYM_E_TOO_LARGE,
  BDSYM_E_BRANCH_EXPLOSION,
  BDSYM_E_NOT_AN_ANTI_ORBIT,
  BDSYM_E_LENGTH_MISMATCH,
  BDSYM_E_KIND_MISMATCH,
  BDSYM_E_NOT_AN_AUTOMORPHISM,
  BDSYM_E_INVALID_ARGUMENT,
  BDSYM_E_IO,
  BDSYM_E_INTERNAL
} bdsym_status;

typedef enum bdsym_format { BDSYM_FORMAT_TEXT = 0, BDSYM_FORMAT_JSON = 1, BDSYM_FORMAT_DOT = 2 } bdsym_format;
typedef enum bdsym_kind { BDSYM_ISO = 0, BDSYM_ANTI_ISO = 1 } bdsym_kind;
typedef enum bdsym_mode { BDSYM_FORWARD = 0, BDSYM_ANTI = 1 } bdsym_mode;

typedef struct bdsym_table bdsym_table;
typedef struct bdsym_bijection bdsym_bijection;
typedef struct bdsym_schedule bdsym_schedule;

BDSYM_API const char* bdsym_version(void);
BDSYM_API const char* bdsym_status_name(bdsym_status status);
BDSYM_API const char* bdsym_last_error(void);
BDSYM_API void bdsym_string_free(char* s);

/* ---- states ---- */
BDSYM_API bdsym_status bdsym_state_parse(const char* bits, int* n, uint32_t* index);

/* ---- truth tables ---- */
BDSYM_API bdsym_status bdsym_table_parse(const char* text, bdsym_table** out);
BDSYM_API bdsym_status bdsym_table_load(const char* path, bdsym_table** out);
BDSYM_API void bdsym_table_free(bdsym_table* t);
BDSYM_API int bdsym_table_dim(const bdsym_table* t);
BDSYM_API bdsym_status bdsym_table_apply(const bdsym_table* t, uint32_t state, uint32_t* out);
BDSYM_API bdsym_status bdsym_table_nu_apply(const bdsym_table* t, uint32_t nu, uint32_t state, uint32_t* out);
BDSYM_API bdsym_status bdsym_table_dual(const bdsym_table* t, bdsym_table** out);
BDSYM_API bdsym_status bdsym_table_serialize(const bdsym_table* t, char** out);

/* ---- bijections ---- */
BDSYM_API bdsym_status bdsym_bijection_parse(const char* text, bdsym_bijection** out);
BDSYM_API bdsym_status bdsym_bijection_load(const char* path, bdsym_bijection** out);
BDSYM_API bdsym_status bdsym_bijection_identity(int n, bdsym_bijection** out);
/* sigma holds n 1-based coordinate indices; result maps mu to (mu_sigma(1), ..., mu_sigma(n)). */
BDSYM_API bdsym_status bdsym_bijection_permutation(int n, const int* sigma, bdsym_bijection** out);
BDSYM_API bdsym_status bdsym_bijection_translation(int n, uint32_t lambda, bdsym_bijection** out);
/* out = b1 o b2 */
BDSYM_API bdsym_status bdsym_bijection_compose(const bdsym_bijection* b1, const bdsym_bijection* b2,
                                               bdsym_bijection** out);
BDSYM_API bdsym_status bdsym_bijection_invert(const bdsym_bijection* b, bdsym_bijection** out);
BDSYM_API void bdsym_bijection_free(bdsym_bijection* b);
BDSYM_API int bdsym_bijection_dim(const bdsym_bijection* b);
BDSYM_API bdsym_status bdsym_bijection_map(const bdsym_bijection* b, uint32_t state, uint32_t* out);
BDSYM_API int bdsym_bijection_equal(const bdsym_bijection* a, const bdsym_bijection* b);
BDSYM_API bdsym_status bdsym_bijection_serialize(const bdsym_bijection* b, char** out);

/* Pair file: "g:" block then "g':" block. */
BDSYM_API bdsym_status bdsym_pair_parse(const char* text, bdsym_bijection** g, bdsym_bijection** gp);
BDSYM_API bdsym_status bdsym_pair_load(const char* path, bdsym_bijection** g, bdsym_bijection** gp);

/* ---- schedules ---- */
BDSYM_API bdsym_status bdsym_schedule_parse(const char* text, bdsym_schedule** out);
BDSYM_API bdsym_status bdsym_schedule_load(const char* path, bdsym_schedule** out);
BDSYM_API void bdsym_schedule_free(bdsym_schedule* s);
BDSYM_API int bdsym_schedule_is_timed(const bdsym_schedule* s);
BDSYM_API int bdsym_schedule_dim(const bdsym_schedule* s);

/* ---- analyses; each renders its result in the requested format ---- */
BDSYM_API bdsym_status bdsym_show(const bdsym_table* phi, bdsym_format fmt, char** out);
BDSYM_API bdsym_status bdsym_portrait(const bdsym_table* phi, bdsym_format fmt, char** out);
/* Timed schedules yield a piecewise signal, untimed ones the discrete orbit. */
BDSYM_API bdsym_status bdsym_orbit(const bdsym_table* phi, uint32_t mu, const bdsym_schedule* sched,
                                   bdsym_format fmt, char** out);
/* branch_cap 0 selects the default cap; max_listed bounds the rendered branches. */
BDSYM_API bdsym_status bdsym_anti_orbit(const bdsym_table* phi, uint32_t mu, const bdsym_schedule* sched,
                                        size_t branch_cap, size_t max_listed, bdsym_format fmt, char** out,
                                        size_t* branch_count);

BDSYM_API bdsym_status bdsym_check_pair(const bdsym_table* phi, const bdsym_table* psi, const bdsym_bijection* g,
                                        const bdsym_bijection* gp, bdsym_kind kind, int* holds);

typedef struct bdsym_search_options {
  size_t limit;   /* 0: unlimited */
  int count_only; /* nonzero: count without listing */
  int max_n;      /* exhaustive-search cap; 0 selects the default */
} bdsym_search_options;

BDSYM_API bdsym_status bdsym_search(const bdsym_table* phi, const bdsym_table* psi, bdsym_kind kind,
                                    const bdsym_search_options* opts, bdsym_format fmt, char** out, size_t* count,
                                    int* truncated);

typedef struct bdsym_verify_options {
  int horizon;
  uint64_t budget;
  uint64_t seed;
} bdsym_verify_options;

BDSYM_API void bdsym_verify_options_init(bdsym_verify_options* opts);
/* kind BDSYM_ISO checks the isomorphism equivalences, BDSYM_ANTI_ISO the anti-isomorphism ones. */
BDSYM_API bdsym_status bdsym_verify(const bdsym_table* phi, const bdsym_table* psi, const bdsym_bijection* g,
                                    const bdsym_bijection* gp, bdsym_kind kind, const bdsym_verify_options* opts,
                                    bdsym_format fmt, char** out, int* pass);

/* Closure of the generator pairs (gs[i], gps[i]) under composition and inversion. */
BDSYM_API bdsym_status bdsym_group(const bdsym_table* phi, const bdsym_bijection* const* gs,
                                   const bdsym_bijection* const* gps, size_t count, bdsym_format fmt, char** out,
                                   size_t* order);

BDSYM_API bdsym_status bdsym_classify(const bdsym_table* phi, int max_n, int list_aut, bdsym_format fmt, char** out);

/* Compares the forward prefix set of `left` with the `right_mode` prefix set of `right`. */
BDSYM_API bdsym_status bdsym_equal_systems(const bdsym_table* left, const bdsym_table* right, int horizon,
                                           bdsym_mode right_mode, bdsym_format fmt, char** out, int* equal);

#ifdef __cplusplus
}
#endif

#endif /* BDSYM_H */
