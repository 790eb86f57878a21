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

#include "hardyops/json_io.hpp"
#include "hardyops/random_symbols.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace hardyops;

TEST_CASE("symbol json round trip") {
  // scalar shorthand
  const TrigPoly p = TrigPoly::scalar(-1, {Complex(2.0, 0.5), Complex(3.0, 0.0),
                                           Complex(5.0, -1.0)});
  const std::string text = trigpoly_to_json_string(p);
  const TrigPoly back = trigpoly_from_json_string(text);
  CHECK(approx_equal(p, back, 0.0));

  const nlohmann::json j = trigpoly_to_json(p);
  CHECK(j.at("lo") == -1);
  CHECK_FALSE(j.contains("block_dim"));
  CHECK(j.at("coeffs")[0][0] == 2.0);

  // explicit shorthand text as a user would write it
  const TrigPoly hand = trigpoly_from_json_string(R"({"lo": 0, "coeffs": [[1, 0], [0, 1]]})");
  CHECK(hand.scalar_coeff(0) == Complex(1.0, 0.0));
  CHECK(hand.scalar_coeff(1) == Complex(0.0, 1.0));

  // block format
  SymbolRng rng(61);
  const TrigPoly b = rng.symbol_window(3, 2);
  CHECK(approx_equal(b, trigpoly_from_json_string(trigpoly_to_json_string(b)), 0.0));
  CHECK(trigpoly_to_json(b).at("block_dim") == 2);
}

TEST_CASE("symbol json errors") {
  CHECK_THROWS_AS(trigpoly_from_json_string("not json"), Error);
  CHECK_THROWS_AS(trigpoly_from_json_string(R"({"coeffs": [[1, 0]]})"), Error);
  CHECK_THROWS_AS(trigpoly_from_json_string(R"({"lo": 0, "coeffs": []})"), Error);
  CHECK_THROWS_AS(
      trigpoly_from_json_string(R"({"lo": 0, "block_dim": 2, "coeffs": [[[1,0],[2,0]]]})"),
      Error);
}

TEST_CASE("matrix json round trip") {
  SymbolRng rng(62);
  const OperatorMatrix t = toeplitz_matrix(rng.symbol_window(2), 4);
  const OperatorMatrix t2 = matrix_from_json_string(matrix_to_json_string(t));
  CHECK(t2.basis() == BasisKind::H2Window);
  CHECK(t2.modes() == 4);
  CHECK((t2.data() - t.data()).cwiseAbs().maxCoeff() == 0.0);

  const OperatorMatrix l = laurent_matrix(rng.symbol_window(2), 3);
  const OperatorMatrix l2 = matrix_from_json_string(matrix_to_json_string(l));
  CHECK(l2.basis() == BasisKind::L2Window);
  CHECK(l2.half_window() == 3);
  CHECK((l2.data() - l.data()).cwiseAbs().maxCoeff() == 0.0);

  const nlohmann::json jl = matrix_to_json(l);
  CHECK(jl.at("basis") == "L2");
  CHECK(jl.at("M") == 3);

  const OperatorMatrix m = OperatorMatrix::model(rng.dense_matrix(3, 3), 3, "modelbasis-v1");
  const OperatorMatrix m2 = matrix_from_json_string(matrix_to_json_string(m));
  CHECK(m2.basis() == BasisKind::ModelBasis);
  CHECK(m2.convention() == "modelbasis-v1");

  CHECK_THROWS_AS(matrix_from_json_string(R"({"basis": "X2", "rows": [[[1,0]]]})"), Error);
  CHECK_THROWS_AS(matrix_from_json_string(R"({"basis": "H2", "rows": [[[1,0],[0,0]]]})"),
                  Error);
}

TEST_CASE("csv export") {
  Eigen::MatrixXcd d(2, 2);
  d << Complex(1.0, 2.0), Complex(3.0, 4.0), Complex(5.0, 6.0), Complex(7.0, 8.0);
  const std::string csv = matrix_to_csv(OperatorMatrix::h2(d, 2, 1));
  CHECK(csv == "1,2,3,4\n5,6,7,8\n");
}

TEST_CASE("blaschke spec json") {
  const BlaschkeSpec spec = blaschke_from_json_string(
      R"({"zeros": [[0.5, 0], [-0.3, 0.4]], "const": [0, 1]})");
  CHECK(spec.degree() == 2);
  CHECK(spec.zeros[1] == Complex(-0.3, 0.4));
  CHECK(spec.unimodular_const == Complex(0.0, 1.0));

  CHECK_THROWS_AS(blaschke_from_json_string(R"({"zeros": [[0.99, 0]]})"), Error);
  CHECK_THROWS_AS(blaschke_from_json_string(R"({})"), Error);
}

TEST_CASE("report json") {
  SymbolRng rng(63);
  const OperatorMatrix good = toeplitz_matrix(rng.symbol_window(2), 6);
  const nlohmann::json pass = report_to_json(test_toeplitz(good, 1e-12));
  CHECK(pass.at("verdict") == true);
  CHECK(pass.at("recovered").contains("phi"));
  CHECK(pass.contains("gauge_note"));
  CHECK(pass.contains("details"));

  const OperatorMatrix bad = OperatorMatrix::h2(rng.dense_matrix(6, 6), 6, 1);
  const nlohmann::json fail = report_to_json(test_toeplitz(bad, 1e-12));
  CHECK(fail.at("verdict") == false);
  CHECK(fail.at("recovered").is_null());

  // pipeline report carries the intermediate symbols
  const OperatorMatrix tph =
      toeplitz_plus_hankel(TrigPoly::monomial(1), TrigPoly::constant(1.0), 8);
  const nlohmann::json pipe = report_to_json(noninjective_pipeline(tph, 1e-10));
  CHECK(pipe.at("recovered").contains("theta"));
  CHECK(pipe.at("recovered").contains("phi2"));
}

TEST_CASE("json round trip preserves doubles exactly") {
  SymbolRng rng(64);
  for (int trial = 0; trial < 10; ++trial) {
    const TrigPoly p = rng.symbol_window(6);
    CHECK(approx_equal(p, trigpoly_from_json_string(trigpoly_to_json_string(p)), 0.0));
  }
}
