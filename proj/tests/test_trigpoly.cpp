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

#include "hardyops/random_symbols.hpp"
#include "hardyops/trigpoly.hpp"

#include <doctest.h>

#include <cmath>

using namespace hardyops;

namespace {

Complex root_of_unity(int k, int grid) {
  const double ang = 2.0 * M_PI * k / grid;
  return Complex(std::cos(ang), std::sin(ang));
}

}  // namespace

TEST_CASE("construction and canonical form") {
  const TrigPoly one = TrigPoly::constant(1.0);
  CHECK(one.lo() == 0);
  CHECK(one.hi() == 0);
  CHECK(one.scalar_coeff(0) == Complex(1.0, 0.0));

  // all-zero input collapses to the canonical zero window [0, 0]
  const TrigPoly zero = TrigPoly::scalar(-1, {0.0, 0.0, 0.0});
  CHECK(zero.is_zero());
  CHECK(zero.lo() == 0);
  CHECK(zero.hi() == 0);

  const TrigPoly p = TrigPoly::scalar(-1, {2.0, 3.0, 5.0});
  CHECK(p.lo() == -1);
  CHECK(p.hi() == 1);
  CHECK(p.scalar_coeff(-1) == Complex(2.0, 0.0));
  CHECK(p.scalar_coeff(0) == Complex(3.0, 0.0));
  CHECK(p.scalar_coeff(1) == Complex(5.0, 0.0));
  CHECK(p.scalar_coeff(7) == Complex(0.0, 0.0));

  // partial trimming keeps interior zeros
  const TrigPoly q = TrigPoly::scalar(0, {0.0, 1.0, 0.0, 2.0, 0.0});
  CHECK(q.lo() == 1);
  CHECK(q.hi() == 3);
  CHECK(q.scalar_coeff(2) == Complex(0.0, 0.0));

  CHECK_THROWS_AS(TrigPoly(0, {}), Error);
  std::vector<Block> ragged{Block::Zero(1, 1), Block::Zero(2, 2)};
  CHECK_THROWS_AS(TrigPoly(0, std::move(ragged)), Error);
}

TEST_CASE("multiply") {
  const TrigPoly z = TrigPoly::monomial(1);
  const TrigPoly zbar = TrigPoly::monomial(-1);
  CHECK(approx_equal(multiply(z, zbar), TrigPoly::constant(1.0)));

  const TrigPoly a = TrigPoly::scalar(-2, {1.0, 0.0, -1.0});  // zbar^2 - 1
  CHECK(approx_equal(multiply(a, TrigPoly::constant(1.0)), a));

  // (z - 1/2)(1 + z/2 + z^2/4) = -1/2 + 3z/4 + 3z^2/8 + z^3/4
  const TrigPoly left = TrigPoly::scalar(0, {-0.5, 1.0});
  const TrigPoly right = TrigPoly::scalar(0, {1.0, 0.5, 0.25});
  const TrigPoly expect = TrigPoly::scalar(0, {-0.5, 0.75, 0.375, 0.25});
  CHECK(approx_equal(multiply(left, right), expect));

  CHECK_THROWS_AS(multiply(z, TrigPoly(2)), Error);
}

TEST_CASE("conj_bar") {
  CHECK(approx_equal(conj_bar(TrigPoly::monomial(1)), TrigPoly::monomial(-1)));
  CHECK(approx_equal(conj_bar(TrigPoly::constant(3.0)), TrigPoly::constant(3.0)));
  CHECK(approx_equal(conj_bar(TrigPoly::monomial(2, Complex(1.0, 1.0))),
                     TrigPoly::monomial(-2, Complex(1.0, -1.0))));

  SymbolRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly a = rng.symbol_window(5, trial % 2 ? 2 : 1);
    const TrigPoly b = rng.symbol_window(3, trial % 2 ? 2 : 1);
    CHECK(approx_equal(conj_bar(conj_bar(a)), a, 0.0));
    CHECK(approx_equal(multiply(conj_bar(a), conj_bar(b)), conj_bar(multiply(b, a)), 1e-13));
  }
}

TEST_CASE("shift") {
  CHECK(approx_equal(shift(TrigPoly::constant(1.0), 1), TrigPoly::monomial(1)));
  const TrigPoly a = TrigPoly::scalar(-2, {1.0, 0.0, -1.0});
  const TrigPoly shifted = shift(a, 2);
  CHECK(shifted.lo() == 0);
  CHECK(shifted.scalar_coeff(0) == Complex(1.0, 0.0));
  CHECK(shifted.scalar_coeff(2) == Complex(-1.0, 0.0));

  SymbolRng rng(12);
  const TrigPoly b = rng.symbol_window(4);
  CHECK(approx_equal(shift(shift(b, 3), -3), b, 0.0));
}

TEST_CASE("evaluate") {
  CHECK(std::abs(evaluate(TrigPoly::monomial(1), Complex(0.0, 1.0))(0, 0) -
                 Complex(0.0, 1.0)) < 1e-15);

  const TrigPoly cosine = TrigPoly::scalar(-1, {1.0, 0.0, 1.0});  // zbar + z
  const double ang = 0.83;
  const Complex t(std::cos(ang), std::sin(ang));
  CHECK(std::abs(evaluate(cosine, t)(0, 0) - 2.0 * std::cos(ang)) < 1e-14);

  // degree-40 truncation of the one-zero Blaschke factor at a = 1/2:
  // -1/2 + (3/4) sum_k (z/2)^(k-1) z
  std::vector<Complex> coeffs{Complex(-0.5, 0.0)};
  for (int k = 1; k <= 40; ++k) coeffs.push_back(0.75 * std::pow(0.5, k - 1));
  const TrigPoly blaschke = TrigPoly::scalar(0, coeffs);
  CHECK(std::abs(std::abs(evaluate(blaschke, Complex(1.0, 0.0))(0, 0)) - 1.0) < 1e-9);

  CHECK_THROWS_AS(evaluate(cosine, Complex(0.5, 0.0)), Error);
}

TEST_CASE("split_plus_minus") {
  const TrigPoly mixed = TrigPoly::scalar(-1, {2.0, 3.0, 5.0});
  const auto [plus, minus] = split_plus_minus(mixed);
  CHECK(approx_equal(plus, TrigPoly::scalar(0, {3.0, 5.0})));
  CHECK(approx_equal(minus, TrigPoly::scalar(-1, {2.0})));

  const TrigPoly analytic = TrigPoly::scalar(0, {1.0, 2.0});
  const auto [ap, am] = split_plus_minus(analytic);
  CHECK(approx_equal(ap, analytic));
  CHECK(am.is_zero());

  const auto [zp, zm] = split_plus_minus(TrigPoly(1));
  CHECK(zp.is_zero());
  CHECK(zm.is_zero());

  SymbolRng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const TrigPoly a = rng.symbol_window(6);
    const auto [p, m] = split_plus_minus(a);
    CHECK(approx_equal(p + m, a, 0.0));
  }
}

TEST_CASE("sup_norm_estimate") {
  CHECK(sup_norm_estimate(TrigPoly::constant(1.0), 8) == doctest::Approx(1.0));
  CHECK(sup_norm_estimate(TrigPoly::scalar(-1, {1.0, 0.0, 1.0}), 256) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sup_norm_estimate(TrigPoly::monomial(2), 16) == doctest::Approx(1.0));
  CHECK_THROWS_AS(sup_norm_estimate(TrigPoly::scalar(-3, {1, 1, 1, 1, 1, 1, 1}), 8), Error);
}

TEST_CASE("evaluate is a ring homomorphism on grid points") {
  SymbolRng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly a = rng.symbol_window(5);
    const TrigPoly b = rng.symbol_window(4);
    const Complex t = root_of_unity(trial + 1, 64);
    const Complex lhs = evaluate(multiply(a, b), t)(0, 0);
    const Complex rhs = evaluate(a, t)(0, 0) * evaluate(b, t)(0, 0);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("block symbols evaluate blockwise") {
  SymbolRng rng(15);
  const TrigPoly a = rng.symbol_window(3, 2);
  const Complex t = root_of_unity(3, 16);
  Block direct = Block::Zero(2, 2);
  for (int n = a.lo(); n <= a.hi(); ++n) direct += a.coeff(n) * std::pow(t, n);
  CHECK((evaluate(a, t) - direct).cwiseAbs().maxCoeff() < 1e-13);
}
