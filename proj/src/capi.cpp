// Copyright 2026 The hardyops authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hardyops.h"

#include "hardyops/bench.hpp"
#include "hardyops/classify.hpp"
#include "hardyops/fast_apply.hpp"
#include "hardyops/json_io.hpp"
#include "hardyops/modelspace.hpp"
#include "hardyops/selftest.hpp"

#include <cstring>
#include <new>
#include <string>

struct hardyops_symbol {
  hardyops::TrigPoly v;
};
struct hardyops_matrix {
  hardyops::OperatorMatrix v;
};
struct hardyops_report {
  hardyops::ClassReport v;
};

namespace {

thread_local std::string g_last_error;

int status_of(hardyops::ErrorCode code) {
  using hardyops::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return HARDYOPS_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return HARDYOPS_ERR_PARSE;
    case ErrorCode::DimensionMismatch: return HARDYOPS_ERR_DIMENSION_MISMATCH;
    case ErrorCode::BasisMismatch: return HARDYOPS_ERR_BASIS_MISMATCH;
    case ErrorCode::NotApplicable: return HARDYOPS_ERR_NOT_APPLICABLE;
    case ErrorCode::Io: return HARDYOPS_ERR_IO;
    case ErrorCode::Internal: return HARDYOPS_ERR_INTERNAL;
  }
  return HARDYOPS_ERR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return HARDYOPS_OK;
  } catch (const hardyops::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HARDYOPS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HARDYOPS_ERR_INTERNAL;
  }
}

int require(bool ok, const char* msg) {
  if (ok) return HARDYOPS_OK;
  g_last_error = msg;
  return HARDYOPS_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// theta inputs accept either a symbol JSON or a Blaschke spec JSON; a spec is
// expanded on the window before use.
}  // namespace

extern "C" {

const char* hardyops_version(void) { return "hardyops 0.1.0"; }

const char* hardyops_last_error(void) { return g_last_error.c_str(); }

void hardyops_string_free(char* s) { delete[] s; }

/* ---- symbols ------------------------------------------------------------ */

int hardyops_symbol_create(int lo, int count, int block_dim,
                           const double* coeffs_interleaved, hardyops_symbol** out) {
  if (int rc = require(out && coeffs_interleaved && count >= 1 && block_dim >= 1,
                       "symbol_create: bad arguments"))
    return rc;
  return guarded([&] {
    std::vector<hardyops::Block> blocks;
    blocks.reserve(static_cast<std::size_t>(count));
    const double* p = coeffs_interleaved;
    for (int i = 0; i < count; ++i) {
      hardyops::Block b(block_dim, block_dim);
      for (int r = 0; r < block_dim; ++r)
        for (int c = 0; c < block_dim; ++c) {
          b(r, c) = hardyops::Complex(p[0], p[1]);
          p += 2;
        }
      blocks.push_back(std::move(b));
    }
    *out = new hardyops_symbol{hardyops::TrigPoly(lo, std::move(blocks))};
  });
}

int hardyops_symbol_parse(const char* json, hardyops_symbol** out) {
  if (int rc = require(json && out, "symbol_parse: bad arguments")) return rc;
  return guarded([&] {
    *out = new hardyops_symbol{hardyops::trigpoly_from_json_string(json)};
  });
}

int hardyops_symbol_to_json(const hardyops_symbol* s, char** out_json) {
  if (int rc = require(s && out_json, "symbol_to_json: bad arguments")) return rc;
  return guarded([&] { *out_json = dup_string(hardyops::trigpoly_to_json_string(s->v)); });
}

void hardyops_symbol_free(hardyops_symbol* s) { delete s; }

int hardyops_symbol_lo(const hardyops_symbol* s, int* out) {
  if (int rc = require(s && out, "symbol_lo: bad arguments")) return rc;
  *out = s->v.lo();
  return HARDYOPS_OK;
}

int hardyops_symbol_hi(const hardyops_symbol* s, int* out) {
  if (int rc = require(s && out, "symbol_hi: bad arguments")) return rc;
  *out = s->v.hi();
  return HARDYOPS_OK;
}

int hardyops_symbol_block_dim(const hardyops_symbol* s, int* out) {
  if (int rc = require(s && out, "symbol_block_dim: bad arguments")) return rc;
  *out = s->v.block_dim();
  return HARDYOPS_OK;
}

int hardyops_symbol_multiply(const hardyops_symbol* a, const hardyops_symbol* b,
                             hardyops_symbol** out) {
  if (int rc = require(a && b && out, "symbol_multiply: bad arguments")) return rc;
  return guarded([&] { *out = new hardyops_symbol{hardyops::multiply(a->v, b->v)}; });
}

int hardyops_symbol_add(const hardyops_symbol* a, const hardyops_symbol* b,
                        hardyops_symbol** out) {
  if (int rc = require(a && b && out, "symbol_add: bad arguments")) return rc;
  return guarded([&] { *out = new hardyops_symbol{a->v + b->v}; });
}

int hardyops_symbol_conj_bar(const hardyops_symbol* a, hardyops_symbol** out) {
  if (int rc = require(a && out, "symbol_conj_bar: bad arguments")) return rc;
  return guarded([&] { *out = new hardyops_symbol{hardyops::conj_bar(a->v)}; });
}

int hardyops_symbol_shift(const hardyops_symbol* a, int k, hardyops_symbol** out) {
  if (int rc = require(a && out, "symbol_shift: bad arguments")) return rc;
  return guarded([&] { *out = new hardyops_symbol{hardyops::shift(a->v, k)}; });
}

int hardyops_symbol_evaluate(const hardyops_symbol* a, double t_re, double t_im,
                             double* out_block) {
  if (int rc = require(a && out_block, "symbol_evaluate: bad arguments")) return rc;
  return guarded([&] {
    const hardyops::Block b = hardyops::evaluate(a->v, hardyops::Complex(t_re, t_im));
    double* p = out_block;
    for (Eigen::Index r = 0; r < b.rows(); ++r)
      for (Eigen::Index c = 0; c < b.cols(); ++c) {
        p[0] = b(r, c).real();
        p[1] = b(r, c).imag();
        p += 2;
      }
  });
}

int hardyops_symbol_sup_norm(const hardyops_symbol* a, int grid, double* out) {
  if (int rc = require(a && out, "symbol_sup_norm: bad arguments")) return rc;
  return guarded([&] { *out = hardyops::sup_norm_estimate(a->v, grid); });
}

/* ---- Blaschke ------------------------------------------------------------ */

int hardyops_blaschke_coeffs(const char* spec_json, int n, hardyops_symbol** out_theta,
                             double* out_tail_bound) {
  if (int rc = require(spec_json && out_theta, "blaschke_coeffs: bad arguments")) return rc;
  return guarded([&] {
    const hardyops::BlaschkeSpec spec = hardyops::blaschke_from_json_string(spec_json);
    hardyops::BlaschkeCoeffs bc = hardyops::blaschke_coeffs(spec, n);
    *out_theta = new hardyops_symbol{std::move(bc.theta)};
    if (out_tail_bound) *out_tail_bound = bc.tail_bound;
  });
}

/* ---- matrices ------------------------------------------------------------ */

int hardyops_matrix_parse(const char* json, hardyops_matrix** out) {
  if (int rc = require(json && out, "matrix_parse: bad arguments")) return rc;
  return guarded([&] {
    *out = new hardyops_matrix{hardyops::matrix_from_json_string(json)};
  });
}

int hardyops_matrix_to_json(const hardyops_matrix* m, char** out_json) {
  if (int rc = require(m && out_json, "matrix_to_json: bad arguments")) return rc;
  return guarded([&] { *out_json = dup_string(hardyops::matrix_to_json_string(m->v)); });
}

int hardyops_matrix_to_csv(const hardyops_matrix* m, char** out_csv) {
  if (int rc = require(m && out_csv, "matrix_to_csv: bad arguments")) return rc;
  return guarded([&] { *out_csv = dup_string(hardyops::matrix_to_csv(m->v)); });
}

void hardyops_matrix_free(hardyops_matrix* m) { delete m; }

int hardyops_matrix_basis(const hardyops_matrix* m, hardyops_basis* out) {
  if (int rc = require(m && out, "matrix_basis: bad arguments")) return rc;
  switch (m->v.basis()) {
    case hardyops::BasisKind::H2Window: *out = HARDYOPS_BASIS_H2; break;
    case hardyops::BasisKind::L2Window: *out = HARDYOPS_BASIS_L2; break;
    case hardyops::BasisKind::ModelBasis: *out = HARDYOPS_BASIS_MODEL; break;
  }
  return HARDYOPS_OK;
}

int hardyops_matrix_modes(const hardyops_matrix* m, int* out) {
  if (int rc = require(m && out, "matrix_modes: bad arguments")) return rc;
  *out = m->v.modes();
  return HARDYOPS_OK;
}

int hardyops_matrix_block_dim(const hardyops_matrix* m, int* out) {
  if (int rc = require(m && out, "matrix_block_dim: bad arguments")) return rc;
  *out = m->v.block_dim();
  return HARDYOPS_OK;
}

int hardyops_gen_toeplitz(const hardyops_symbol* phi, int n, hardyops_matrix** out) {
  if (int rc = require(phi && out, "gen_toeplitz: bad arguments")) return rc;
  return guarded([&] { *out = new hardyops_matrix{hardyops::toeplitz_matrix(phi->v, n)}; });
}

int hardyops_gen_hankel(const hardyops_symbol* psi, int n, hardyops_matrix** out) {
  if (int rc = require(psi && out, "gen_hankel: bad arguments")) return rc;
  return guarded([&] { *out = new hardyops_matrix{hardyops::hankel_matrix(psi->v, n)}; });
}

int hardyops_gen_tph(const hardyops_symbol* phi, const hardyops_symbol* psi, int n,
                     hardyops_matrix** out) {
  if (int rc = require(phi && psi && out, "gen_tph: bad arguments")) return rc;
  return guarded([&] {
    *out = new hardyops_matrix{hardyops::toeplitz_plus_hankel(phi->v, psi->v, n)};
  });
}

int hardyops_gen_laurent(const hardyops_symbol* phi, int m, hardyops_matrix** out) {
  if (int rc = require(phi && out, "gen_laurent: bad arguments")) return rc;
  return guarded([&] { *out = new hardyops_matrix{hardyops::laurent_matrix(phi->v, m)}; });
}

int hardyops_gen_projection_plus(int m, int block_dim, hardyops_matrix** out) {
  if (int rc = require(out != nullptr, "gen_projection_plus: bad arguments")) return rc;
  return guarded([&] {
    *out = new hardyops_matrix{hardyops::projection_plus(m, block_dim)};
  });
}

int hardyops_gen_projection_minus(int m, int block_dim, hardyops_matrix** out) {
  if (int rc = require(out != nullptr, "gen_projection_minus: bad arguments")) return rc;
  return guarded([&] {
    *out = new hardyops_matrix{hardyops::projection_minus(m, block_dim)};
  });
}

int hardyops_gen_paired(const hardyops_symbol* phi, const hardyops_symbol* psi, int m,
                        hardyops_matrix** out) {
  if (int rc = require(phi && psi && out, "gen_paired: bad arguments")) return rc;
  return guarded([&] {
    *out = new hardyops_matrix{
        hardyops::paired_matrix(hardyops::SymbolPair(phi->v, psi->v), m)};
  });
}

int hardyops_gen_transposed_paired(const hardyops_symbol* phi, const hardyops_symbol* psi,
                                   int m, hardyops_matrix** out) {
  if (int rc = require(phi && psi && out, "gen_transposed_paired: bad arguments")) return rc;
  return guarded([&] {
    *out = new hardyops_matrix{
        hardyops::transposed_paired_matrix(hardyops::SymbolPair(phi->v, psi->v), m)};
  });
}

int hardyops_gen_theta_paired(const hardyops_symbol* theta, const hardyops_symbol* phi,
                              const hardyops_symbol* psi, int n, hardyops_matrix** out) {
  if (int rc = require(theta && phi && psi && out, "gen_theta_paired: bad arguments"))
    return rc;
  return guarded([&] {
    *out = new hardyops_matrix{hardyops::theta_paired_matrix(
        hardyops::ThetaPairedSpec(theta->v, phi->v, psi->v), n)};
  });
}

int hardyops_gen_model_projection(const hardyops_symbol* theta, int n, int which,
                                  hardyops_matrix** out) {
  if (int rc = require(theta && out && (which == 0 || which == 1),
                       "gen_model_projection: bad arguments"))
    return rc;
  return guarded([&] {
    hardyops::ModelProjections proj = hardyops::model_projection(theta->v, n);
    *out = new hardyops_matrix{which == 0 ? std::move(proj.p_model)
                                          : std::move(proj.p_theta_h2)};
  });
}

int hardyops_gen_truncated_toeplitz(const hardyops_symbol* phi, const hardyops_symbol* theta,
                                    int n, hardyops_matrix** out) {
  if (int rc = require(phi && theta && out, "gen_truncated_toeplitz: bad arguments"))
    return rc;
  return guarded([&] {
    *out = new hardyops_matrix{hardyops::truncated_toeplitz(phi->v, theta->v, n)};
  });
}

/* ---- classification -------------------------------------------------------- */

int hardyops_classify_toeplitz(const hardyops_matrix* a, double tol, hardyops_report** out) {
  if (int rc = require(a && out, "classify_toeplitz: bad arguments")) return rc;
  return guarded([&] { *out = new hardyops_report{hardyops::test_toeplitz(a->v, tol)}; });
}

int hardyops_classify_hankel(const hardyops_matrix* a, double tol, hardyops_report** out) {
  if (int rc = require(a && out, "classify_hankel: bad arguments")) return rc;
  return guarded([&] { *out = new hardyops_report{hardyops::test_hankel(a->v, tol)}; });
}

int hardyops_classify_tph(const hardyops_matrix* a, double tol, hardyops_report** out) {
  if (int rc = require(a && out, "classify_tph: bad arguments")) return rc;
  return guarded([&] { *out = new hardyops_report{hardyops::test_tph(a->v, tol)}; });
}

int hardyops_classify_paired(const hardyops_matrix* x, double tol, hardyops_report** out) {
  if (int rc = require(x && out, "classify_paired: bad arguments")) return rc;
  return guarded([&] { *out = new hardyops_report{hardyops::test_paired(x->v, tol)}; });
}

int hardyops_classify_transposed_paired(const hardyops_matrix* x, double tol,
                                        hardyops_report** out) {
  if (int rc = require(x && out, "classify_transposed_paired: bad arguments")) return rc;
  return guarded([&] {
    *out = new hardyops_report{hardyops::test_transposed_paired(x->v, tol)};
  });
}

int hardyops_classify_theta_paired(const hardyops_matrix* x, const hardyops_symbol* theta,
                                   double tol, int guard, hardyops_report** out) {
  if (int rc = require(x && theta && out, "classify_theta_paired: bad arguments")) return rc;
  return guarded([&] {
    *out = new hardyops_report{hardyops::test_theta_paired(x->v, theta->v, tol, guard)};
  });
}

int hardyops_decompose_tph(const hardyops_matrix* a, double tol, hardyops_report** out) {
  if (int rc = require(a && out, "decompose_tph: bad arguments")) return rc;
  return guarded([&] { *out = new hardyops_report{hardyops::decompose_tph(a->v, tol)}; });
}

int hardyops_pipeline_noninjective(const hardyops_matrix* a, double tol,
                                   hardyops_report** out) {
  if (int rc = require(a && out, "pipeline_noninjective: bad arguments")) return rc;
  return guarded([&] {
    *out = new hardyops_report{hardyops::noninjective_pipeline(a->v, tol)};
  });
}

int hardyops_hankel_kernel_inner(const hardyops_matrix* h, double tol,
                                 hardyops_symbol** out_theta) {
  if (int rc = require(h && out_theta, "hankel_kernel_inner: bad arguments")) return rc;
  return guarded([&] {
    *out_theta = new hardyops_symbol{hardyops::hankel_kernel_inner(h->v, tol)};
  });
}

int hardyops_report_verdict(const hardyops_report* r, int* out) {
  if (int rc = require(r && out, "report_verdict: bad arguments")) return rc;
  *out = r->v.verdict ? 1 : 0;
  return HARDYOPS_OK;
}

int hardyops_report_residual(const hardyops_report* r, double* out) {
  if (int rc = require(r && out, "report_residual: bad arguments")) return rc;
  *out = r->v.residual;
  return HARDYOPS_OK;
}

int hardyops_report_guard(const hardyops_report* r, int* out) {
  if (int rc = require(r && out, "report_guard: bad arguments")) return rc;
  *out = r->v.guard;
  return HARDYOPS_OK;
}

int hardyops_report_to_json(const hardyops_report* r, char** out_json) {
  if (int rc = require(r && out_json, "report_to_json: bad arguments")) return rc;
  return guarded([&] { *out_json = dup_string(hardyops::report_to_json_string(r->v)); });
}

int hardyops_report_recovered(const hardyops_report* r, const char* name,
                              hardyops_symbol** out) {
  if (int rc = require(r && name && out, "report_recovered: bad arguments")) return rc;
  return guarded([&] {
    const std::string key(name);
    if (r->v.recovered) {
      if (key == "phi") {
        *out = new hardyops_symbol{r->v.recovered->phi};
        return;
      }
      if (key == "psi") {
        *out = new hardyops_symbol{r->v.recovered->psi};
        return;
      }
      auto it = r->v.recovered_extra.find(key);
      if (it != r->v.recovered_extra.end()) {
        *out = new hardyops_symbol{it->second};
        return;
      }
    }
    throw hardyops::Error(hardyops::ErrorCode::NotApplicable,
                          "no recovered symbol named '" + key + "' in this report");
  });
}

void hardyops_report_free(hardyops_report* r) { delete r; }

/* ---- fast application -------------------------------------------------------- */

namespace {

int fast_apply_impl(const hardyops::TrigPoly* phi, const hardyops::TrigPoly* psi,
                    const double* x, int len, double* out, int* used_fft) {
  return guarded([&] {
    Eigen::VectorXcd vx(len);
    for (int i = 0; i < len; ++i) vx(i) = hardyops::Complex(x[2 * i], x[2 * i + 1]);
    hardyops::FastApplyResult r =
        psi == nullptr
            ? hardyops::fast_apply_toeplitz(*phi, vx)
            : (phi == nullptr
                   ? hardyops::fast_apply_hankel(*psi, vx)
                   : hardyops::fast_apply_tph(hardyops::SymbolPair(*phi, *psi), vx));
    for (int i = 0; i < len; ++i) {
      out[2 * i] = r.y(i).real();
      out[2 * i + 1] = r.y(i).imag();
    }
    if (used_fft) *used_fft = r.used_fft ? 1 : 0;
  });
}

}  // namespace

int hardyops_fast_apply_toeplitz(const hardyops_symbol* phi, const double* x, int len,
                                 double* out, int* used_fft) {
  if (int rc = require(phi && x && out && len >= 1, "fast_apply_toeplitz: bad arguments"))
    return rc;
  return fast_apply_impl(&phi->v, nullptr, x, len, out, used_fft);
}

int hardyops_fast_apply_hankel(const hardyops_symbol* psi, const double* x, int len,
                               double* out, int* used_fft) {
  if (int rc = require(psi && x && out && len >= 1, "fast_apply_hankel: bad arguments"))
    return rc;
  return fast_apply_impl(nullptr, &psi->v, x, len, out, used_fft);
}

int hardyops_fast_apply_tph(const hardyops_symbol* phi, const hardyops_symbol* psi,
                            const double* x, int len, double* out, int* used_fft) {
  if (int rc = require(phi && psi && x && out && len >= 1, "fast_apply_tph: bad arguments"))
    return rc;
  return fast_apply_impl(&phi->v, &psi->v, x, len, out, used_fft);
}

/* ---- selftest and bench ------------------------------------------------------- */

int hardyops_selftest(uint64_t seed, int inject_fault, int* all_pass, char** out_json) {
  if (int rc = require(out_json != nullptr, "selftest: bad arguments")) return rc;
  return guarded([&] {
    const hardyops::SelftestReport rep = hardyops::selftest(seed, inject_fault != 0);
    if (all_pass) *all_pass = rep.all_pass ? 1 : 0;
    *out_json = dup_string(hardyops::selftest_report_to_json_string(rep));
  });
}

int hardyops_bench(const int* sizes, int count, uint64_t seed, char** out_json) {
  if (int rc = require(sizes && out_json && count >= 1, "bench: bad arguments")) return rc;
  return guarded([&] {
    const std::vector<int> ns(sizes, sizes + count);
    *out_json = dup_string(hardyops::bench_to_json_string(hardyops::bench_fast_paths(ns, seed)));
  });
}

}  // extern "C"
