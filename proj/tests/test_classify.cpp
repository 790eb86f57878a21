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

#include "hardyops/classify.hpp"
#include "hardyops/random_symbols.hpp"

#include <doctest.h>

#include <Eigen/SVD>

using namespace hardyops;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

double symbol_distance(const TrigPoly& a, const TrigPoly& b) {
  double worst = 0.0;
  for (int n = std::min(a.lo(), b.lo()); n <= std::max(a.hi(), b.hi()); ++n)
    worst = std::max(worst, (a.coeff(n) - b.coeff(n)).cwiseAbs().maxCoeff());
  return worst;
}

// Distance from the gauge plane of the stacked coefficient difference.
double off_gauge(const SymbolPair& got, const SymbolPair& want, int n) {
  const Eigen::MatrixXd gauge = tph_gauge_basis(n);
  const Eigen::MatrixXcd diff =
      stack_tph_coefficients(got, n) - stack_tph_coefficients(want, n);
  const Eigen::MatrixXcd proj = gauge.cast<Complex>() * (gauge.cast<Complex>().adjoint() * diff);
  return max_abs(diff - proj);
}

OperatorMatrix random_h2(SymbolRng& rng, int n) {
  return OperatorMatrix::h2(rng.dense_matrix(n, n), n, 1);
}

}  // namespace

TEST_CASE("test_toeplitz") {
  const OperatorMatrix id = toeplitz_matrix(TrigPoly::constant(1.0), 5);
  ClassReport r = test_toeplitz(id, 1e-12);
  CHECK(r.verdict);
  CHECK(r.residual == 0.0);
  REQUIRE(r.recovered.has_value());
  CHECK(approx_equal(r.recovered->phi, TrigPoly::constant(1.0)));

  CHECK_FALSE(test_toeplitz(hankel_matrix(TrigPoly::monomial(2), 4), 1e-9).verdict);

  const TrigPoly phi = TrigPoly::scalar(-1, {2.0, 3.0, 5.0});
  r = test_toeplitz(toeplitz_matrix(phi, 6), 1e-12);
  CHECK(r.verdict);
  CHECK(symbol_distance(r.recovered->phi, phi) == 0.0);

  CHECK_THROWS_AS(test_toeplitz(laurent_matrix(phi, 4), 1e-9), Error);
}

TEST_CASE("test_hankel") {
  ClassReport r = test_hankel(OperatorMatrix::h2(Eigen::MatrixXcd::Zero(4, 4), 4, 1), 1e-12);
  CHECK(r.verdict);
  CHECK(r.recovered->psi.is_zero());

  r = test_hankel(hankel_matrix(TrigPoly::constant(1.0), 5), 1e-12);
  CHECK(r.verdict);
  CHECK(approx_equal(r.recovered->psi, TrigPoly::constant(1.0)));

  CHECK_FALSE(test_hankel(toeplitz_matrix(TrigPoly::monomial(1), 4), 1e-9).verdict);

  // recovery window spans the full 2N-1 anti-diagonals
  SymbolRng rng(41);
  const TrigPoly psi = rng.analytic_symbol(7);
  r = test_hankel(hankel_matrix(psi, 5), 1e-12);
  CHECK(r.verdict);
  CHECK(symbol_distance(r.recovered->psi, psi) == 0.0);
}

TEST_CASE("test_tph cross rule") {
  const OperatorMatrix ones = OperatorMatrix::h2(Eigen::MatrixXcd::Ones(3, 3), 3, 1);
  CHECK(test_tph(ones, 1e-12).verdict);

  SymbolRng rng(42);
  const int n = 12;
  for (int trial = 0; trial < 10; ++trial) {
    const TrigPoly phi = rng.symbol_window(4);
    const TrigPoly psi = rng.symbol_window(4);
    const OperatorMatrix a = toeplitz_plus_hankel(phi, psi, n);
    const ClassReport r = test_tph(a, 1e-12);
    CHECK(r.verdict);
    CHECK(r.residual <= 1e-12);
    CHECK(r.details.at("cond2_toeplitz") <= 1e-12);
    CHECK(r.details.at("cond3_hankel") <= 1e-12);
    CHECK(r.details.at("verdict_agreement") == 1.0);

    // one interior entry off by epsilon shows up as exactly epsilon
    Eigen::MatrixXcd d = a.data();
    d(5, 6) += 1e-3;
    const ClassReport bad = test_tph(OperatorMatrix::h2(std::move(d), n, 1), 1e-6);
    CHECK_FALSE(bad.verdict);
    CHECK(bad.residual == doctest::Approx(1e-3).epsilon(1e-9));
    CHECK(bad.details.at("verdict_agreement") == 1.0);
  }

  CHECK_THROWS_AS(test_tph(OperatorMatrix::h2(Eigen::MatrixXcd::Zero(2, 2), 2, 1), 1e-9),
                  Error);  // needs N >= 3
}

TEST_CASE("tph section gauge is exactly two-dimensional") {
  // Null space of the incidence map (t, h) -> T + H, measured by SVD.
  const int n = 5;
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(n * n, 4 * n - 2);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      sys(j * n + k, (j - k) + (n - 1)) = 1.0;
      sys(j * n + k, (2 * n - 1) + (j + k)) = 1.0;
    }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys);
  int null_dim = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) < 1e-8) ++null_dim;
  CHECK(null_dim == 2);

  // and the declared gauge basis spans it
  const Eigen::MatrixXd gauge = tph_gauge_basis(n);
  CHECK((sys * gauge).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((gauge.transpose() * gauge - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("decompose_tph") {
  // identity: recovered pair differs from (t = delta_0, h = 0) by a gauge move
  const OperatorMatrix id = toeplitz_matrix(TrigPoly::constant(1.0), 4);
  ClassReport r = decompose_tph(id, 1e-10);
  CHECK(r.verdict);
  CHECK(r.residual <= 1e-12);
  CHECK(off_gauge(*r.recovered, SymbolPair(TrigPoly::constant(1.0), TrigPoly(1)), 4) <=
        1e-12);

  const OperatorMatrix hk = hankel_matrix(TrigPoly::monomial(2), 4);
  r = decompose_tph(hk, 1e-10);
  CHECK(r.verdict);
  CHECK(off_gauge(*r.recovered, SymbolPair(TrigPoly(1), TrigPoly::monomial(2)), 4) <= 1e-12);

  SymbolRng rng(43);
  const int n = 16;
  for (int trial = 0; trial < 8; ++trial) {
    const SymbolPair truth(rng.symbol_window(5), rng.analytic_symbol(9));
    const OperatorMatrix a = toeplitz_plus_hankel(truth.phi, truth.psi, n);
    r = decompose_tph(a, 1e-10);
    CHECK(r.verdict);
    CHECK(r.residual <= 1e-10);
    CHECK(off_gauge(*r.recovered, truth, n) <= 1e-10);

    // pseudoinverse oracle: the SVD minimum-norm solution must match the
    // decomposition's canonical representative
    Eigen::MatrixXcd sys = Eigen::MatrixXcd::Zero(n * n, 4 * n - 2);
    Eigen::VectorXcd rhs(n * n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        sys(j * n + k, (j - k) + (n - 1)) = 1.0;
        sys(j * n + k, (2 * n - 1) + (j + k)) = 1.0;
        rhs(j * n + k) = a.data()(j, k);
      }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    const Eigen::VectorXcd pinv_sol = svd.solve(rhs);
    const Eigen::MatrixXcd got = stack_tph_coefficients(*r.recovered, n);
    CHECK((got.col(0) - pinv_sol).cwiseAbs().maxCoeff() <= 1e-10);
  }

  // verdict-false input comes back unrecovered instead of throwing
  const ClassReport bad = decompose_tph(random_h2(rng, 8), 1e-9);
  CHECK_FALSE(bad.verdict);
  CHECK_FALSE(bad.recovered.has_value());
}

TEST_CASE("test_paired and recovery") {
  SymbolRng rng(44);
  const TrigPoly phi = rng.symbol_window(3);
  CHECK(test_paired(laurent_matrix(phi, 5), 1e-12).verdict);

  const SymbolPair zpair(TrigPoly::monomial(1), TrigPoly::monomial(-1));
  const ClassReport r = test_paired(paired_matrix(zpair, 4), 1e-12);
  CHECK(r.verdict);
  CHECK(r.residual == 0.0);

  // X(1) = z and z X(zbar) = z for the Laurent operator M_z
  const SymbolPair mz = recover_paired_symbols(laurent_matrix(TrigPoly::monomial(1), 4), 1e-12);
  CHECK(approx_equal(mz.phi, TrigPoly::monomial(1)));
  CHECK(approx_equal(mz.psi, TrigPoly::monomial(1)));

  const SymbolPair one_zbar = recover_paired_symbols(
      paired_matrix(SymbolPair(TrigPoly::constant(1.0), TrigPoly::monomial(-1)), 4), 1e-12);
  CHECK(approx_equal(one_zbar.phi, TrigPoly::constant(1.0)));
  CHECK(approx_equal(one_zbar.psi, TrigPoly::monomial(-1)));

  for (int trial = 0; trial < 10; ++trial) {
    const SymbolPair truth(rng.symbol_window(5), rng.symbol_window(5));
    const OperatorMatrix s = paired_matrix(truth, 12);
    const ClassReport rt = test_paired(s, 1e-12);
    CHECK(rt.verdict);
    CHECK(symbol_distance(rt.recovered->phi, truth.phi) == 0.0);
    CHECK(symbol_distance(rt.recovered->psi, truth.psi) == 0.0);
  }

  // one entry in column 0 off: no longer paired
  Eigen::MatrixXcd d = paired_matrix(zpair, 4).data();
  d(4 + 2, 4 + 0) += 0.5;
  CHECK_FALSE(test_paired(OperatorMatrix::l2(std::move(d), 4, 1), 1e-9).verdict);

  CHECK_THROWS_AS(
      recover_paired_symbols(OperatorMatrix::l2(rng.dense_matrix(9, 9), 4, 1), 1e-9), Error);
  CHECK_THROWS_AS(test_paired(toeplitz_matrix(phi, 4), 1e-9), Error);
}

TEST_CASE("test_transposed_paired") {
  SymbolRng rng(45);
  const TrigPoly phi = rng.symbol_window(3);
  CHECK(test_transposed_paired(laurent_matrix(phi, 5), 1e-12).verdict);

  const SymbolPair truth(TrigPoly::monomial(1),
                         TrigPoly::constant(1.0) + TrigPoly::monomial(-1));
  const ClassReport r = test_transposed_paired(transposed_paired_matrix(truth, 6), 1e-12);
  CHECK(r.verdict);
  CHECK(symbol_distance(r.recovered->phi, truth.phi) == 0.0);
  CHECK(symbol_distance(r.recovered->psi, truth.psi) == 0.0);

  // a genuinely paired section with distinct halves is not transposed-paired
  const OperatorMatrix s =
      paired_matrix(SymbolPair(TrigPoly::monomial(1), TrigPoly::monomial(-1)), 4);
  CHECK_FALSE(test_transposed_paired(s, 1e-9).verdict);
}

TEST_CASE("hankel_kernel_inner") {
  ClassReport dummy;
  (void)dummy;
  CHECK(approx_equal(hankel_kernel_inner(hankel_matrix(TrigPoly::constant(1.0), 6), 1e-9),
                     TrigPoly::monomial(1), 0.0));
  CHECK(approx_equal(hankel_kernel_inner(hankel_matrix(TrigPoly::monomial(2), 5), 1e-9),
                     TrigPoly::monomial(3), 0.0));
  CHECK(approx_equal(
      hankel_kernel_inner(OperatorMatrix::h2(Eigen::MatrixXcd::Zero(4, 4), 4, 1), 1e-9),
      TrigPoly::constant(1.0), 0.0));

  // injective section: full-window symbol
  SymbolRng rng(46);
  std::vector<Complex> full;
  for (int s = 0; s <= 8; ++s) full.push_back(rng.complex_sym() + Complex(2.0, 0.0));
  const OperatorMatrix inj = hankel_matrix(TrigPoly::scalar(0, full), 5);
  CHECK_THROWS_AS(hankel_kernel_inner(inj, 1e-9), Error);

  // non-Hankel input is rejected before any extraction
  CHECK_THROWS_AS(hankel_kernel_inner(toeplitz_matrix(TrigPoly::monomial(1), 5), 1e-9),
                  Error);

  // |theta| = 1 on the circle for exact polynomial kernels
  const TrigPoly theta = hankel_kernel_inner(hankel_matrix(TrigPoly::monomial(3), 7), 1e-9);
  for (int k = 0; k < 64; ++k) {
    const double ang = 2.0 * M_PI * k / 64.0;
    CHECK(std::abs(std::abs(evaluate(theta, Complex(std::cos(ang), std::sin(ang)))(0, 0)) -
                   1.0) < 1e-8);
  }
}

TEST_CASE("noninjective_pipeline worked case") {
  const int n = 8;
  const OperatorMatrix a =
      toeplitz_plus_hankel(TrigPoly::monomial(1), TrigPoly::constant(1.0), n);
  const ClassReport r = noninjective_pipeline(a, 1e-10);
  REQUIRE(r.verdict);
  CHECK(approx_equal(r.recovered_extra.at("theta"), TrigPoly::monomial(1), 0.0));
  CHECK(approx_equal(r.recovered_extra.at("phi2"), TrigPoly::monomial(2), 0.0));
  CHECK(approx_equal(r.recovered->phi, TrigPoly::monomial(1), 0.0));
  CHECK(approx_equal(r.recovered->psi, TrigPoly::constant(1.0), 0.0));
  CHECK(r.details.at("theta_degree_stable") == 1.0);
}

TEST_CASE("noninjective_pipeline edge cases") {
  SymbolRng rng(47);
  // pure Toeplitz: theta = 1, psi = 0
  const TrigPoly phi = rng.symbol_window(3);
  const ClassReport r = noninjective_pipeline(toeplitz_matrix(phi, 10), 1e-10);
  REQUIRE(r.verdict);
  CHECK(approx_equal(r.recovered_extra.at("theta"), TrigPoly::constant(1.0)));
  CHECK(symbol_distance(r.recovered->phi, phi) <= 1e-12);
  CHECK(r.recovered->psi.is_zero());

  // Hankel part with a full-rank section: the pipeline refuses
  std::vector<Complex> full;
  for (int s = 0; s <= 18; ++s) full.push_back(rng.complex_sym() + Complex(2.0, 0.0));
  const OperatorMatrix dense_h =
      toeplitz_plus_hankel(phi, TrigPoly::scalar(0, full), 10);
  CHECK_THROWS_AS(noninjective_pipeline(dense_h, 1e-9), Error);

  // unstructured input: verdict false via the Hankel gate
  const ClassReport bad = noninjective_pipeline(random_h2(rng, 8), 1e-9);
  CHECK_FALSE(bad.verdict);
}

TEST_CASE("block case classifies and decomposes") {
  SymbolRng rng(48);
  const int n = 12;
  for (int trial = 0; trial < 5; ++trial) {
    const SymbolPair truth(rng.symbol_window(3, 2), rng.analytic_symbol(6, 2));
    const OperatorMatrix a = toeplitz_plus_hankel(truth.phi, truth.psi, n);
    CHECK(test_tph(a, 1e-11).verdict);
    const ClassReport r = decompose_tph(a, 1e-9);
    CHECK(r.verdict);
    CHECK(r.residual <= 1e-9);
    CHECK(off_gauge(*r.recovered, truth, n) <= 1e-9);
  }
}

TEST_CASE("unstructured matrices fail every test with margin") {
  SymbolRng rng(49);
  for (int trial = 0; trial < 10; ++trial) {
    const OperatorMatrix a = random_h2(rng, 16);
    const OperatorMatrix x = OperatorMatrix::l2(rng.dense_matrix(17, 17), 8, 1);
    for (const ClassReport& r : {test_toeplitz(a, 1e-9), test_hankel(a, 1e-9),
                                 test_tph(a, 1e-9), test_paired(x, 1e-9),
                                 test_transposed_paired(x, 1e-9)}) {
      CHECK_FALSE(r.verdict);
      CHECK(r.residual >= 1e-2);
    }
  }
}
