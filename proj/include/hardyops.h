/* Copyright 2026 The hardyops authors
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

/* C API of the hardyops shared library.
 *
 * All objects are opaque handles created and destroyed through this
 * interface. Functions return HARDYOPS_OK (0) on success and a nonzero
 * status otherwise; hardyops_last_error() describes the most recent failure
 * on the calling thread. Strings returned through char** outputs are owned
 * by the caller and released with hardyops_string_free().
 */

#ifndef HARDYOPS_H
#define HARDYOPS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HARDYOPS_BUILD)
#    define HARDYOPS_API __declspec(dllexport)
#  else
#    define HARDYOPS_API __declspec(dllimport)
#  endif
#else
#  define HARDYOPS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hardyops_symbol hardyops_symbol;
typedef struct hardyops_matrix hardyops_matrix;
typedef struct hardyops_report hardyops_report;

typedef enum hardyops_status {
  HARDYOPS_OK = 0,
  HARDYOPS_ERR_INVALID_ARGUMENT = 1,
  HARDYOPS_ERR_PARSE = 2,
  HARDYOPS_ERR_DIMENSION_MISMATCH = 3,
  HARDYOPS_ERR_BASIS_MISMATCH = 4,
  HARDYOPS_ERR_NOT_APPLICABLE = 5,
  HARDYOPS_ERR_IO = 6,
  HARDYOPS_ERR_INTERNAL = 7
} hardyops_status;

typedef enum hardyops_basis {
  HARDYOPS_BASIS_H2 = 0,
  HARDYOPS_BASIS_L2 = 1,
  HARDYOPS_BASIS_MODEL = 2
} hardyops_basis;

HARDYOPS_API const char* hardyops_version(void);
HARDYOPS_API const char* hardyops_last_error(void);
HARDYOPS_API void hardyops_string_free(char* s);

/* ---- symbols (trigonometric polynomials) ------------------------------- */

/* coeffs: (count * block_dim * block_dim) complex blocks, row-major within a
 * block, interleaved re,im; block i sits at Fourier index lo + i. */
HARDYOPS_API int hardyops_symbol_create(int lo, int count, int block_dim,
                                        const double* coeffs_interleaved,
                                        hardyops_symbol** out);
HARDYOPS_API int hardyops_symbol_parse(const char* json, hardyops_symbol** out);
HARDYOPS_API int hardyops_symbol_to_json(const hardyops_symbol* s, char** out_json);
HARDYOPS_API void hardyops_symbol_free(hardyops_symbol* s);

HARDYOPS_API int hardyops_symbol_lo(const hardyops_symbol* s, int* out);
HARDYOPS_API int hardyops_symbol_hi(const hardyops_symbol* s, int* out);
HARDYOPS_API int hardyops_symbol_block_dim(const hardyops_symbol* s, int* out);

HARDYOPS_API int hardyops_symbol_multiply(const hardyops_symbol* a,
                                          const hardyops_symbol* b,
                                          hardyops_symbol** out);
HARDYOPS_API int hardyops_symbol_add(const hardyops_symbol* a,
                                     const hardyops_symbol* b,
                                     hardyops_symbol** out);
HARDYOPS_API int hardyops_symbol_conj_bar(const hardyops_symbol* a, hardyops_symbol** out);
HARDYOPS_API int hardyops_symbol_shift(const hardyops_symbol* a, int k, hardyops_symbol** out);
/* out_block: block_dim^2 interleaved re,im values. */
HARDYOPS_API int hardyops_symbol_evaluate(const hardyops_symbol* a, double t_re,
                                          double t_im, double* out_block);
HARDYOPS_API int hardyops_symbol_sup_norm(const hardyops_symbol* a, int grid, double* out);

/* ---- Blaschke products -------------------------------------------------- */

/* spec_json: {"zeros": [[re,im], ...], "const": [re,im]}. Returns the Taylor
 * window [0, n-1] and the truncation tail bound |1 - sum |coef|^2|. */
HARDYOPS_API int hardyops_blaschke_coeffs(const char* spec_json, int n,
                                          hardyops_symbol** out_theta,
                                          double* out_tail_bound);

/* ---- operator matrices -------------------------------------------------- */

HARDYOPS_API int hardyops_matrix_parse(const char* json, hardyops_matrix** out);
HARDYOPS_API int hardyops_matrix_to_json(const hardyops_matrix* m, char** out_json);
HARDYOPS_API int hardyops_matrix_to_csv(const hardyops_matrix* m, char** out_csv);
HARDYOPS_API void hardyops_matrix_free(hardyops_matrix* m);

HARDYOPS_API int hardyops_matrix_basis(const hardyops_matrix* m, hardyops_basis* out);
HARDYOPS_API int hardyops_matrix_modes(const hardyops_matrix* m, int* out);
HARDYOPS_API int hardyops_matrix_block_dim(const hardyops_matrix* m, int* out);

/* Finite sections from symbols. */
HARDYOPS_API int hardyops_gen_toeplitz(const hardyops_symbol* phi, int n,
                                       hardyops_matrix** out);
HARDYOPS_API int hardyops_gen_hankel(const hardyops_symbol* psi, int n,
                                     hardyops_matrix** out);
HARDYOPS_API int hardyops_gen_tph(const hardyops_symbol* phi, const hardyops_symbol* psi,
                                  int n, hardyops_matrix** out);
HARDYOPS_API int hardyops_gen_laurent(const hardyops_symbol* phi, int m,
                                      hardyops_matrix** out);
HARDYOPS_API int hardyops_gen_projection_plus(int m, int block_dim, hardyops_matrix** out);
HARDYOPS_API int hardyops_gen_projection_minus(int m, int block_dim, hardyops_matrix** out);
HARDYOPS_API int hardyops_gen_paired(const hardyops_symbol* phi, const hardyops_symbol* psi,
                                     int m, hardyops_matrix** out);
HARDYOPS_API int hardyops_gen_transposed_paired(const hardyops_symbol* phi,
                                                const hardyops_symbol* psi, int m,
                                                hardyops_matrix** out);
HARDYOPS_API int hardyops_gen_theta_paired(const hardyops_symbol* theta,
                                           const hardyops_symbol* phi,
                                           const hardyops_symbol* psi, int n,
                                           hardyops_matrix** out);
/* which = 0: P onto the model space K_theta, 1: P onto theta H^2. */
HARDYOPS_API int hardyops_gen_model_projection(const hardyops_symbol* theta, int n,
                                               int which, hardyops_matrix** out);
HARDYOPS_API int hardyops_gen_truncated_toeplitz(const hardyops_symbol* phi,
                                                 const hardyops_symbol* theta, int n,
                                                 hardyops_matrix** out);

/* ---- classification ----------------------------------------------------- */

HARDYOPS_API int hardyops_classify_toeplitz(const hardyops_matrix* a, double tol,
                                            hardyops_report** out);
HARDYOPS_API int hardyops_classify_hankel(const hardyops_matrix* a, double tol,
                                          hardyops_report** out);
HARDYOPS_API int hardyops_classify_tph(const hardyops_matrix* a, double tol,
                                       hardyops_report** out);
HARDYOPS_API int hardyops_classify_paired(const hardyops_matrix* x, double tol,
                                          hardyops_report** out);
HARDYOPS_API int hardyops_classify_transposed_paired(const hardyops_matrix* x, double tol,
                                                     hardyops_report** out);
/* guard < 0 derives the band from theta and the recovered symbol. */
HARDYOPS_API int hardyops_classify_theta_paired(const hardyops_matrix* x,
                                                const hardyops_symbol* theta, double tol,
                                                int guard, hardyops_report** out);
HARDYOPS_API int hardyops_decompose_tph(const hardyops_matrix* a, double tol,
                                        hardyops_report** out);
HARDYOPS_API int hardyops_pipeline_noninjective(const hardyops_matrix* a, double tol,
                                                hardyops_report** out);
HARDYOPS_API int hardyops_hankel_kernel_inner(const hardyops_matrix* h, double tol,
                                              hardyops_symbol** out_theta);

HARDYOPS_API int hardyops_report_verdict(const hardyops_report* r, int* out);
HARDYOPS_API int hardyops_report_residual(const hardyops_report* r, double* out);
HARDYOPS_API int hardyops_report_guard(const hardyops_report* r, int* out);
HARDYOPS_API int hardyops_report_to_json(const hardyops_report* r, char** out_json);
/* name: "phi", "psi", or a key from the recovered_extra map ("theta",
 * "phi2"). Fails with NOT_APPLICABLE when absent. */
HARDYOPS_API int hardyops_report_recovered(const hardyops_report* r, const char* name,
                                           hardyops_symbol** out);
HARDYOPS_API void hardyops_report_free(hardyops_report* r);

/* ---- fast application ---------------------------------------------------- */

/* x, out: len complex values interleaved re,im; len = modes * block_dim.
 * used_fft reports the dense fallback for block symbols (may be NULL). */
HARDYOPS_API int hardyops_fast_apply_toeplitz(const hardyops_symbol* phi, const double* x,
                                              int len, double* out, int* used_fft);
HARDYOPS_API int hardyops_fast_apply_hankel(const hardyops_symbol* psi, const double* x,
                                            int len, double* out, int* used_fft);
HARDYOPS_API int hardyops_fast_apply_tph(const hardyops_symbol* phi,
                                         const hardyops_symbol* psi, const double* x,
                                         int len, double* out, int* used_fft);

/* ---- selftest and bench -------------------------------------------------- */

HARDYOPS_API int hardyops_selftest(uint64_t seed, int inject_fault, int* all_pass,
                                   char** out_json);
HARDYOPS_API int hardyops_bench(const int* sizes, int count, uint64_t seed,
                                char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* HARDYOPS_H */
