/* alsp - exact traces of Hecke operators twisted by Atkin-Lehner involutions
 * on S_k(Gamma_0(N)), sign-pattern eigenspace dimensions, and p-adic
 * Plancherel equidistribution reports.
 *
 * C surface over the C++ core: opaque handles, status codes, allocated
 * strings released with alsp_free().  All functions are thread-safe as long
 * as each alsp_table is treated as immutable after creation (they are).
 * Exact traces are returned as decimal strings because they outgrow any
 * fixed-width integer once the weight climbs.
 */
#ifndef ALSP_H
#define ALSP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct alsp_table alsp_table; /* Hurwitz class-number table, immutable */

typedef enum alsp_status {
  ALSP_OK = 0,
  ALSP_E_INVALID = 1,  /* argument/precondition violation */
  ALSP_E_RANGE = 2,    /* table does not cover a needed class number */
  ALSP_E_IO = 3,       /* file missing/unreadable/unwritable */
  ALSP_E_FORMAT = 4,   /* cache file failed validation */
  ALSP_E_ASSERT = 5,   /* internal integrality/nonnegativity guarantee tripped */
  ALSP_E_NOCONV = 6,   /* quadrature did not reach the requested tolerance */
  ALSP_E_INTERNAL = 7, /* unexpected failure */
} alsp_status;

const char* alsp_status_name(alsp_status s);
/* Detail message for the most recent failure on this thread. */
const char* alsp_last_error(void);
const char* alsp_version(void);
/* Frees strings and row arrays allocated by this library. */
void alsp_free(void* ptr);

/* ---- Hurwitz class-number table ------------------------------------- */

alsp_status alsp_table_build(int64_t max_n, alsp_table** out);
alsp_status alsp_table_load(const char* path, alsp_table** out);
alsp_status alsp_table_save(const alsp_table* table, const char* path);
int64_t alsp_table_max(const alsp_table* table); /* -1 on null */
/* 12*H(n) (integral); H(0) = -1/12 is stored as -1. */
alsp_status alsp_table_hurwitz12(const alsp_table* table, int64_t n, int64_t* out);
void alsp_table_free(alsp_table* table);

/* ---- spaces and sign patterns ---------------------------------------- */

#define ALSP_SPACE_FULL 0
#define ALSP_SPACE_NEW 1

/* Sign patterns are passed as text: "<primepower>:<+|->" comma-joined over
 * the maximal prime powers of the level, e.g. "4:+,5:-" for level 20; the
 * empty string for level 1. */
int64_t alsp_sigma_count(int64_t level); /* 2^omega(level); -1 on bad level */
/* Canonical text of the index-th pattern (lexicographic, '+' before '-',
 * smallest prime varying slowest). */
alsp_status alsp_sigma_name(int64_t level, int64_t index, char* buf, size_t buflen);
alsp_status alsp_sigma_check(int64_t level, const char* sigma);
/* 1 admissible, 0 not (newspace, 4 || level, sign(4) = +1), -1 on error. */
int alsp_sigma_admissible(int64_t level, const char* sigma, int space);

/* ---- traces and dimensions ------------------------------------------- */

typedef struct alsp_trace_stats {
  double normalized; /* exact / m^{(k-1)/2} */
  double predicted;  /* main term of the normalized trace */
  double residual;   /* normalized - predicted */
} alsp_trace_stats;

/* Trace of T_m W_Q on S_k(N) (space full) or its new subspace.  Requires even
 * k >= 2, gcd(m, N) = 1, Q || N, and table coverage up to 4mQ.  *exact
 * receives a decimal integer string (alsp_free).  stats may be NULL. */
alsp_status alsp_trace_q(const alsp_table* table, int64_t k, int64_t N, int64_t m, int64_t Q,
                         int space, char** exact, alsp_trace_stats* stats);
/* Trace of T_m on the sigma eigenspace (table coverage 4mN). */
alsp_status alsp_trace_sigma(const alsp_table* table, int64_t k, int64_t N, int64_t m,
                             const char* sigma, int space, char** exact,
                             alsp_trace_stats* stats);

alsp_status alsp_dim(const alsp_table* table, int64_t k, int64_t N, int space, int64_t* out);
alsp_status alsp_dim_sigma(const alsp_table* table, int64_t k, int64_t N, const char* sigma,
                           int space, int64_t* out);
/* Fricke eigenspace only: sign = +1 or -1. */
alsp_status alsp_dim_global(const alsp_table* table, int64_t k, int64_t N, int sign, int space,
                            int64_t* out);

/* Limiting dimension proportions (exact rational "num/den" plus a double).
 * Either output may be NULL. */
alsp_status alsp_proportion_sigma(int64_t N, const char* sigma, int space, char** exact,
                                  double* value);
alsp_status alsp_proportion_global(int64_t N, int sign, int space, char** exact, double* value);

/* ---- equidistribution ------------------------------------------------- */

#define ALSP_ROW_OK 0
#define ALSP_ROW_P_DIVIDES_LEVEL 1
#define ALSP_ROW_ZERO_DIM 2
#define ALSP_ROW_INADMISSIBLE 3
const char* alsp_row_flag_name(int32_t flag);

typedef struct alsp_equid_row {
  int64_t p;
  int64_t N;
  int64_t k;
  int64_t sigma_index;
  char sigma[128];
  int32_t space;
  int32_t n;    /* -1 on flagged (skipped) rows */
  int32_t flag; /* ALSP_ROW_* */
  double observed;  /* NaN on flagged rows */
  double target;
  double deviation;
} alsp_equid_row;

/* Moment grid over levels x weights x patterns x n in [0, n_max]; rows come
 * back ordered by (N, k, sigma index, n), flagged rows included.  sigma =
 * NULL enumerates all 2^omega patterns per level.  *rows is alsp_free()d. */
alsp_status alsp_equid(const alsp_table* table, int64_t p, const int64_t* levels, size_t nlevels,
                       const int64_t* weights, size_t nweights, const char* sigma, int space,
                       int32_t n_max, int32_t jobs, alsp_equid_row** rows, size_t* nrows);

alsp_status alsp_target_moment(int64_t p, int32_t n, double* out);
alsp_status alsp_plancherel_moment(int64_t p, int32_t n, double abs_tol, double* out);
alsp_status alsp_chebyshev_moment(const alsp_table* table, int64_t k, int64_t N,
                                  const char* sigma, int space, int64_t p, int32_t n,
                                  double* out);

/* ---- verification suites ---------------------------------------------- */

typedef struct alsp_verify_summary {
  int64_t checks;
  int64_t failures;
} alsp_verify_summary;

/* Newline-joined suite names (alsp_free). */
alsp_status alsp_verify_suites(char** names);
/* Largest Hurwitz index the suite needs; pass max values <= 0 for defaults. */
alsp_status alsp_verify_table_need(const char* suite, int64_t max_n, int64_t max_k, int64_t* out);
/* Runs a suite.  Failure rows come back newline-joined in *failures (NULL when
 * everything passed); the run itself returns ALSP_OK even with failures.
 * table may be NULL (one is built as needed). */
alsp_status alsp_verify(const alsp_table* table, const char* suite, int64_t max_n, int64_t max_k,
                        int32_t jobs, char** failures, alsp_verify_summary* summary);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ALSP_H */
