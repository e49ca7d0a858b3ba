/*
 * Copyright 2026 The gmean Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libgmean: generalized golden means, metallic means, the
 * trinomial family x^n +/- p x^e = m/2, and the triangle / multiplication
 * table catalogs built on them.
 *
 * Conventions:
 *   - Every fallible call returns gm_status; GM_OK is 0. On failure,
 *     gm_last_error() returns a message for the calling thread.
 *   - Opaque handles are created by gm_*_create / gm_* producers and must be
 *     released with the matching gm_*_destroy. Destroy functions accept NULL.
 *   - Rationals cross the boundary as strings: "7", "-3/2" or "0.25".
 *   - String outputs use (buf, cap, len): the full length (without the NUL)
 *     is always stored in *len; GM_ERR_BUFFER_TOO_SMALL is returned when
 *     cap <= length. buf may be NULL when cap is 0.
 *   - Array outputs use (out, cap, count) the same way.
 */

#ifndef GMEAN_GMEAN_H
#define GMEAN_GMEAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GMEAN_BUILDING_LIBRARY)
#    define GMEAN_API __declspec(dllexport)
#  else
#    define GMEAN_API __declspec(dllimport)
#  endif
#else
#  define GMEAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gm_status {
  GM_OK = 0,
  GM_ERR_INVALID_ARGUMENT = 1,
  GM_ERR_NO_REAL_ROOTS = 2,
  GM_ERR_DEGENERATE_IDENTITY = 3,
  GM_ERR_NO_REAL_ROOT = 4,
  GM_ERR_MIXED_RADICANDS = 5,
  GM_ERR_DIVISION_BY_ZERO = 6,
  GM_ERR_NON_POSITIVE = 7,
  GM_ERR_NO_CONVERGENCE = 8,
  GM_ERR_CROSS_CHECK_FAILED = 9,
  GM_ERR_OVERFLOW = 10,
  GM_ERR_BUFFER_TOO_SMALL = 11,
  GM_ERR_INTERNAL = 12
} gm_status;

/* Kebab-case name such as "degenerate-identity". Never NULL. */
GMEAN_API const char* gm_status_name(gm_status status);

/* Message for the last failure on this thread; "" if none. */
GMEAN_API const char* gm_last_error(void);

GMEAN_API const char* gm_version(void);

typedef enum gm_sign { GM_SIGN_PLUS = 0, GM_SIGN_MINUS = 1 } gm_sign;

/* ---- exact quadratic surds: a + b*sqrt(d) ------------------------------ */

typedef struct gm_surd gm_surd;

typedef enum gm_surd_op { GM_OP_ADD = 0, GM_OP_SUB, GM_OP_MUL, GM_OP_DIV } gm_surd_op;

typedef enum gm_surd_part {
  GM_PART_A_NUM = 0,
  GM_PART_A_DEN,
  GM_PART_B_NUM,
  GM_PART_B_DEN
} gm_surd_part;

GMEAN_API gm_status gm_surd_create(const char* a, const char* b, uint64_t d, gm_surd** out);
GMEAN_API gm_status gm_surd_clone(const gm_surd* v, gm_surd** out);
GMEAN_API void gm_surd_destroy(gm_surd* v);

GMEAN_API gm_status gm_surd_combine(gm_surd_op op, const gm_surd* lhs, const gm_surd* rhs,
                                    gm_surd** out);
/* *out is -1, 0 or 1. */
GMEAN_API gm_status gm_surd_compare(const gm_surd* lhs, const gm_surd* rhs, int* out);

/* Numerator/denominator of the normalized a or b, as a decimal string. */
GMEAN_API gm_status gm_surd_part_string(const gm_surd* v, gm_surd_part part, char* buf,
                                        size_t cap, size_t* len);
GMEAN_API uint64_t gm_surd_radicand(const gm_surd* v);
GMEAN_API double gm_surd_to_double(const gm_surd* v);

/* "(-1 + sqrt(5))/2" */
GMEAN_API gm_status gm_surd_to_string(const gm_surd* v, char* buf, size_t cap, size_t* len);

/* Truncated decimal expansion, 1 <= digits <= 1000. */
GMEAN_API gm_status gm_surd_to_decimal(const gm_surd* v, uint32_t digits, char* buf, size_t cap,
                                       size_t* len);

/* ---- continued fractions ------------------------------------------------ */

typedef struct gm_cf gm_cf;

GMEAN_API gm_status gm_continued_fraction(const gm_surd* v, uint32_t max_terms, gm_cf** out);
GMEAN_API void gm_cf_destroy(gm_cf* cf);
/* Terms are returned as 64-bit values; creation fails with GM_ERR_OVERFLOW
   if any partial quotient does not fit. */
GMEAN_API const uint64_t* gm_cf_initial(const gm_cf* cf, size_t* count);
GMEAN_API const uint64_t* gm_cf_period(const gm_cf* cf, size_t* count);
GMEAN_API int gm_cf_truncated(const gm_cf* cf);

/* ---- quadratic family x^2 +/- p x - q = 0 ------------------------------ */

typedef struct gm_root_pair gm_root_pair;

GMEAN_API gm_status gm_solve_quadratic(uint64_t p, const char* q, gm_sign sign,
                                       gm_root_pair** out);
GMEAN_API gm_status gm_generalized_gm(uint64_t m, gm_root_pair** out);
GMEAN_API void gm_root_pair_destroy(gm_root_pair* pair);
/* Borrowed views; valid until the pair is destroyed. x1 >= x2. */
GMEAN_API const gm_surd* gm_root_pair_x1(const gm_root_pair* pair);
GMEAN_API const gm_surd* gm_root_pair_x2(const gm_root_pair* pair);
GMEAN_API gm_status gm_root_pair_discriminant(const gm_root_pair* pair, char* buf, size_t cap,
                                              size_t* len);
/* 2m + 1 for pairs made by gm_generalized_gm; 0 otherwise. */
GMEAN_API uint64_t gm_root_pair_r(const gm_root_pair* pair);

GMEAN_API gm_status gm_metallic_mean(uint64_t p, const char* q, gm_surd** out);

/* *found = 1 and (k, k + 1) when q = k(k + 1); *found = 0 otherwise. */
GMEAN_API gm_status gm_integer_metallic(uint64_t q, int* found, uint64_t* k, uint64_t* k_next);

/* ---- trinomial solver --------------------------------------------------- */

typedef enum gm_lower_exponent {
  GM_LOWER_ONE = 0,        /* x^n + s p x     = m/2 */
  GM_LOWER_N_MINUS_ONE = 1 /* x^n + s p x^n-1 = m/2 */
} gm_lower_exponent;

typedef struct gm_trinomial_spec {
  uint32_t n;
  uint64_t p;
  gm_sign sign;
  uint64_t m;
  gm_lower_exponent lower;
} gm_trinomial_spec;

typedef struct gm_solver_config {
  double tolerance;
  uint32_t max_iterations;
  double bracket_growth;
} gm_solver_config;

/* tolerance 1e-12, 200 iterations, growth 2.0 */
GMEAN_API void gm_solver_config_default(gm_solver_config* cfg);

typedef struct gm_bracket {
  double lo;
  double hi;
} gm_bracket;

typedef struct gm_root {
  double value;
  gm_bracket bracket;
  double residual;
  uint32_t iterations;
} gm_root;

typedef struct gm_root_set gm_root_set;

/* cfg may be NULL for defaults in every solver call. */
GMEAN_API gm_status gm_isolate_real_roots(const gm_trinomial_spec* spec,
                                          const gm_solver_config* cfg, gm_bracket* out,
                                          size_t cap, size_t* count);
GMEAN_API gm_status gm_solve_trinomial(const gm_trinomial_spec* spec, const gm_solver_config* cfg,
                                       gm_root_set** out);
GMEAN_API gm_status gm_solve_gm_general(uint32_t n, uint64_t m, const gm_solver_config* cfg,
                                        gm_root_set** out);

typedef enum gm_stakhov_variant {
  GM_STAKHOV_A = 0, /* x^n + x = 1 */
  GM_STAKHOV_B = 1  /* x^n + x^(n-1) = 1 */
} gm_stakhov_variant;

GMEAN_API gm_status gm_solve_stakhov(uint32_t n, gm_stakhov_variant variant,
                                     const gm_solver_config* cfg, double* out);

typedef enum gm_euler_mode { GM_EULER_DIRECT = 0, GM_EULER_CONSTRAINED = 1 } gm_euler_mode;

/* (a + b^n)/n = x solved for b. a is ignored in constrained mode (a = b). */
GMEAN_API gm_status gm_solve_euler(const char* a, uint32_t n, const char* x, gm_euler_mode mode,
                                   const gm_solver_config* cfg, gm_root_set** out);

GMEAN_API void gm_root_set_destroy(gm_root_set* set);
GMEAN_API size_t gm_root_set_size(const gm_root_set* set);
/* Roots are ascending. */
GMEAN_API gm_status gm_root_set_get(const gm_root_set* set, size_t index, gm_root* out);
GMEAN_API int gm_root_set_exhaustive(const gm_root_set* set);

/* ---- triangle catalog --------------------------------------------------- */

typedef struct gm_triple {
  uint64_t a;
  uint64_t b;
  uint64_t c;
} gm_triple;

GMEAN_API gm_status gm_diophantus_triple(uint64_t index, gm_triple* out);
/* Writes count terms; out must hold count values. */
GMEAN_API gm_status gm_four_k_sequence(size_t count, uint64_t* out);

typedef enum gm_table_side { GM_SIDE_LEFT = 0, GM_SIDE_RIGHT = 1, GM_SIDE_BOTH = 2 } gm_table_side;

typedef struct gm_table_row {
  gm_table_side side; /* LEFT or RIGHT */
  uint64_t index;
  uint64_t m;
  uint64_t h;
  uint64_t r;
} gm_table_row;

/* rows * (1 or 2) entries; with GM_SIDE_BOTH the sides alternate per index. */
GMEAN_API gm_status gm_table_one(uint64_t rows, gm_table_side side, gm_table_row* out, size_t cap,
                                 size_t* count);
/* Exact x1 / x2 of a single row; the caller owns both outputs. */
GMEAN_API gm_status gm_table_one_roots(uint64_t index, gm_table_side side, gm_surd** x1,
                                       gm_surd** x2);
GMEAN_API gm_status gm_left_to_right_index(uint64_t index, uint64_t* out);

typedef enum gm_triplet_tag {
  GM_TRIPLET_FIBONACCI = 0,
  GM_TRIPLET_LUCAS = 1,
  GM_TRIPLET_NEITHER = 2
} gm_triplet_tag;

/* indices is filled only when *tag != GM_TRIPLET_NEITHER; may be NULL. */
GMEAN_API gm_status gm_classify_triplet(const uint64_t values[3], gm_triplet_tag* tag,
                                        uint64_t indices[3]);

/* ---- harmonic multiplication table ------------------------------------- */

typedef struct gm_harmonic gm_harmonic;

typedef struct gm_doublet {
  uint64_t q;
  uint64_t k;
  uint64_t upper_row, upper_col; /* (k, k + 1) */
  uint64_t lower_row, lower_col; /* (k + 1, k) */
} gm_doublet;

typedef struct gm_key_row {
  uint64_t k;
  uint64_t square_plus_k;
  uint64_t product;
} gm_key_row;

typedef struct gm_integer_mean {
  uint64_t q;
  uint64_t x1;
  uint64_t x2;
} gm_integer_mean;

GMEAN_API gm_status gm_harmonic_create(size_t size, gm_harmonic** out);
GMEAN_API void gm_harmonic_destroy(gm_harmonic* table);
GMEAN_API size_t gm_harmonic_size(const gm_harmonic* table);
GMEAN_API gm_status gm_harmonic_cell(const gm_harmonic* table, size_t row, size_t col,
                                     uint64_t* out);
GMEAN_API gm_status gm_harmonic_doublets(const gm_harmonic* table, gm_doublet* out, size_t cap,
                                         size_t* count);
GMEAN_API gm_status gm_harmonic_key_rows(uint64_t k_max, gm_key_row* out, size_t cap,
                                         size_t* count);
GMEAN_API gm_status gm_harmonic_cross_check(const gm_harmonic* table, gm_integer_mean* out,
                                            size_t cap, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* GMEAN_GMEAN_H */
