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

// Exercises the shared-library boundary through hardyops.h alone.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hardyops.h>

#include <cmath>
#include <cstring>
#include <string>

namespace {

std::string take_string(char* s) {
  std::string out(s);
  hardyops_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error strings") {
  CHECK(std::strlen(hardyops_version()) > 0);
  CHECK(hardyops_last_error() != nullptr);
}

TEST_CASE("argument validation") {
  CHECK(hardyops_symbol_parse(nullptr, nullptr) == HARDYOPS_ERR_INVALID_ARGUMENT);
  hardyops_symbol* s = nullptr;
  CHECK(hardyops_symbol_parse("{bad", &s) == HARDYOPS_ERR_PARSE);
  CHECK(std::strlen(hardyops_last_error()) > 0);
}

TEST_CASE("symbol lifecycle and algebra") {
  hardyops_symbol* z = nullptr;
  REQUIRE(hardyops_symbol_parse(R"({"lo": 1, "coeffs": [[1, 0]]})", &z) == HARDYOPS_OK);
  int lo = 0, hi = 0, d = 0;
  CHECK(hardyops_symbol_lo(z, &lo) == HARDYOPS_OK);
  CHECK(hardyops_symbol_hi(z, &hi) == HARDYOPS_OK);
  CHECK(hardyops_symbol_block_dim(z, &d) == HARDYOPS_OK);
  CHECK(lo == 1);
  CHECK(hi == 1);
  CHECK(d == 1);

  hardyops_symbol* zbar = nullptr;
  REQUIRE(hardyops_symbol_conj_bar(z, &zbar) == HARDYOPS_OK);
  hardyops_symbol* one = nullptr;
  REQUIRE(hardyops_symbol_multiply(z, zbar, &one) == HARDYOPS_OK);
  CHECK(hardyops_symbol_lo(one, &lo) == HARDYOPS_OK);
  CHECK(hardyops_symbol_hi(one, &hi) == HARDYOPS_OK);
  CHECK(lo == 0);
  CHECK(hi == 0);

  double block[2] = {0.0, 0.0};
  REQUIRE(hardyops_symbol_evaluate(z, 0.0, 1.0, block) == HARDYOPS_OK);
  CHECK(block[0] == doctest::Approx(0.0));
  CHECK(block[1] == doctest::Approx(1.0));

  double sup = 0.0;
  REQUIRE(hardyops_symbol_sup_norm(one, 8, &sup) == HARDYOPS_OK);
  CHECK(sup == doctest::Approx(1.0));

  hardyops_symbol_free(one);
  hardyops_symbol_free(zbar);
  hardyops_symbol_free(z);
}

TEST_CASE("symbol create from raw coefficients") {
  const double coeffs[] = {2.0, 0.0, 3.0, 0.0, 5.0, 0.0};
  hardyops_symbol* s = nullptr;
  REQUIRE(hardyops_symbol_create(-1, 3, 1, coeffs, &s) == HARDYOPS_OK);
  char* json = nullptr;
  REQUIRE(hardyops_symbol_to_json(s, &json) == HARDYOPS_OK);
  const std::string text = take_string(json);
  CHECK(text.find("\"lo\":-1") != std::string::npos);
  hardyops_symbol_free(s);
}

TEST_CASE("generate and classify through the C boundary") {
  hardyops_symbol* phi = nullptr;
  hardyops_symbol* psi = nullptr;
  REQUIRE(hardyops_symbol_parse(R"({"lo": -1, "coeffs": [[2,0],[3,0],[5,0]]})", &phi) ==
          HARDYOPS_OK);
  REQUIRE(hardyops_symbol_parse(R"({"lo": 0, "coeffs": [[1,0],[0,0],[4,0]]})", &psi) ==
          HARDYOPS_OK);

  hardyops_matrix* a = nullptr;
  REQUIRE(hardyops_gen_tph(phi, psi, 12, &a) == HARDYOPS_OK);
  int modes = 0;
  CHECK(hardyops_matrix_modes(a, &modes) == HARDYOPS_OK);
  CHECK(modes == 12);
  hardyops_basis basis;
  CHECK(hardyops_matrix_basis(a, &basis) == HARDYOPS_OK);
  CHECK(basis == HARDYOPS_BASIS_H2);

  hardyops_report* rep = nullptr;
  REQUIRE(hardyops_classify_tph(a, 1e-12, &rep) == HARDYOPS_OK);
  int verdict = 0;
  CHECK(hardyops_report_verdict(rep, &verdict) == HARDYOPS_OK);
  CHECK(verdict == 1);
  double residual = 1.0;
  CHECK(hardyops_report_residual(rep, &residual) == HARDYOPS_OK);
  CHECK(residual <= 1e-12);
  hardyops_report_free(rep);

  REQUIRE(hardyops_decompose_tph(a, 1e-10, &rep) == HARDYOPS_OK);
  CHECK(hardyops_report_verdict(rep, &verdict) == HARDYOPS_OK);
  CHECK(verdict == 1);
  hardyops_symbol* t = nullptr;
  CHECK(hardyops_report_recovered(rep, "phi", &t) == HARDYOPS_OK);
  hardyops_symbol_free(t);
  CHECK(hardyops_report_recovered(rep, "nope", &t) == HARDYOPS_ERR_NOT_APPLICABLE);
  char* rj = nullptr;
  REQUIRE(hardyops_report_to_json(rep, &rj) == HARDYOPS_OK);
  CHECK(take_string(rj).find("\"verdict\": true") != std::string::npos);
  hardyops_report_free(rep);

  // round trip the matrix JSON
  char* mj = nullptr;
  REQUIRE(hardyops_matrix_to_json(a, &mj) == HARDYOPS_OK);
  const std::string mtext = take_string(mj);
  hardyops_matrix* a2 = nullptr;
  REQUIRE(hardyops_matrix_parse(mtext.c_str(), &a2) == HARDYOPS_OK);
  hardyops_matrix_free(a2);
  char* csv = nullptr;
  REQUIRE(hardyops_matrix_to_csv(a, &csv) == HARDYOPS_OK);
  CHECK(take_string(csv).size() > 0);

  hardyops_matrix_free(a);
  hardyops_symbol_free(psi);
  hardyops_symbol_free(phi);
}

TEST_CASE("paired and theta-paired through the C boundary") {
  hardyops_symbol* phi = nullptr;
  hardyops_symbol* psi = nullptr;
  REQUIRE(hardyops_symbol_parse(R"({"lo": 1, "coeffs": [[1,0]]})", &phi) == HARDYOPS_OK);
  REQUIRE(hardyops_symbol_parse(R"({"lo": -1, "coeffs": [[1,0]]})", &psi) == HARDYOPS_OK);

  hardyops_matrix* s = nullptr;
  REQUIRE(hardyops_gen_paired(phi, psi, 6, &s) == HARDYOPS_OK);
  hardyops_report* rep = nullptr;
  REQUIRE(hardyops_classify_paired(s, 1e-12, &rep) == HARDYOPS_OK);
  int verdict = 0;
  CHECK(hardyops_report_verdict(rep, &verdict) == HARDYOPS_OK);
  CHECK(verdict == 1);
  hardyops_report_free(rep);
  hardyops_matrix_free(s);

  // mismatched bases are rejected with the basis status
  hardyops_matrix* toep = nullptr;
  REQUIRE(hardyops_gen_toeplitz(phi, 6, &toep) == HARDYOPS_OK);
  CHECK(hardyops_classify_paired(toep, 1e-12, &rep) == HARDYOPS_ERR_BASIS_MISMATCH);

  // theta-paired generation and classification
  hardyops_symbol* theta = nullptr;
  double tail = -1.0;
  REQUIRE(hardyops_blaschke_coeffs(R"({"zeros": [[0.5, 0]], "const": [1, 0]})", 48, &theta,
                                   &tail) == HARDYOPS_OK);
  CHECK(tail >= 0.0);
  CHECK(tail < 1e-10);

  hardyops_symbol* one = nullptr;
  REQUIRE(hardyops_symbol_parse(R"({"lo": 0, "coeffs": [[1,0]]})", &one) == HARDYOPS_OK);
  hardyops_matrix* x = nullptr;
  REQUIRE(hardyops_gen_theta_paired(theta, phi, one, 48, &x) == HARDYOPS_OK);
  REQUIRE(hardyops_classify_theta_paired(x, theta, 1e-6, -1, &rep) == HARDYOPS_OK);
  CHECK(hardyops_report_verdict(rep, &verdict) == HARDYOPS_OK);
  CHECK(verdict == 1);
  hardyops_report_free(rep);

  hardyops_matrix* pk = nullptr;
  REQUIRE(hardyops_gen_model_projection(theta, 48, 0, &pk) == HARDYOPS_OK);
  hardyops_matrix* tt = nullptr;
  REQUIRE(hardyops_gen_truncated_toeplitz(phi, theta, 48, &tt) == HARDYOPS_OK);
  int dim = 0;
  CHECK(hardyops_matrix_modes(tt, &dim) == HARDYOPS_OK);
  CHECK(dim == 1);

  hardyops_matrix_free(tt);
  hardyops_matrix_free(pk);
  hardyops_matrix_free(x);
  hardyops_matrix_free(toep);
  hardyops_symbol_free(one);
  hardyops_symbol_free(theta);
  hardyops_symbol_free(psi);
  hardyops_symbol_free(phi);
}

TEST_CASE("noninjective pipeline and kernel inner function") {
  hardyops_symbol* z = nullptr;
  hardyops_symbol* one = nullptr;
  REQUIRE(hardyops_symbol_parse(R"({"lo": 1, "coeffs": [[1,0]]})", &z) == HARDYOPS_OK);
  REQUIRE(hardyops_symbol_parse(R"({"lo": 0, "coeffs": [[1,0]]})", &one) == HARDYOPS_OK);

  hardyops_matrix* a = nullptr;
  REQUIRE(hardyops_gen_tph(z, one, 10, &a) == HARDYOPS_OK);
  hardyops_report* rep = nullptr;
  REQUIRE(hardyops_pipeline_noninjective(a, 1e-10, &rep) == HARDYOPS_OK);
  int verdict = 0;
  CHECK(hardyops_report_verdict(rep, &verdict) == HARDYOPS_OK);
  CHECK(verdict == 1);
  hardyops_symbol* theta = nullptr;
  REQUIRE(hardyops_report_recovered(rep, "theta", &theta) == HARDYOPS_OK);
  int lo = 0, hi = 0;
  CHECK(hardyops_symbol_lo(theta, &lo) == HARDYOPS_OK);
  CHECK(hardyops_symbol_hi(theta, &hi) == HARDYOPS_OK);
  CHECK(lo == 1);
  CHECK(hi == 1);
  hardyops_symbol_free(theta);
  hardyops_report_free(rep);

  hardyops_matrix* h = nullptr;
  REQUIRE(hardyops_gen_hankel(one, 8, &h) == HARDYOPS_OK);
  hardyops_symbol* inner = nullptr;
  REQUIRE(hardyops_hankel_kernel_inner(h, 1e-9, &inner) == HARDYOPS_OK);
  CHECK(hardyops_symbol_lo(inner, &lo) == HARDYOPS_OK);
  CHECK(lo == 1);
  hardyops_symbol_free(inner);
  hardyops_matrix_free(h);
  hardyops_matrix_free(a);
  hardyops_symbol_free(one);
  hardyops_symbol_free(z);
}

TEST_CASE("fast apply through the C boundary") {
  hardyops_symbol* z = nullptr;
  REQUIRE(hardyops_symbol_parse(R"({"lo": 1, "coeffs": [[1,0]]})", &z) == HARDYOPS_OK);
  const int n = 4;
  double x[2 * n] = {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  double y[2 * n];
  int used_fft = 0;
  REQUIRE(hardyops_fast_apply_toeplitz(z, x, n, y, &used_fft) == HARDYOPS_OK);
  CHECK(used_fft == 1);
  CHECK(std::abs(y[0]) < 1e-12);
  CHECK(std::abs(y[2] - 1.0) < 1e-12);
  hardyops_symbol_free(z);
}

TEST_CASE("selftest and bench through the C boundary") {
  int all_pass = 0;
  char* json = nullptr;
  REQUIRE(hardyops_selftest(42, 0, &all_pass, &json) == HARDYOPS_OK);
  CHECK(all_pass == 1);
  const std::string text = take_string(json);
  CHECK(text.find("\"all_pass\": true") != std::string::npos);

  // the fault fixture must trip the tph group and only that group
  REQUIRE(hardyops_selftest(42, 1, &all_pass, &json) == HARDYOPS_OK);
  CHECK(all_pass == 0);
  const std::string faulty = take_string(json);
  CHECK(faulty.find("tph_construction") != std::string::npos);

  const int sizes[] = {64, 256};
  REQUIRE(hardyops_bench(sizes, 2, 7, &json) == HARDYOPS_OK);
  const std::string bench = take_string(json);
  CHECK(bench.find("\"N\": 64") != std::string::npos);
  CHECK(bench.find("speedup") != std::string::npos);
}
