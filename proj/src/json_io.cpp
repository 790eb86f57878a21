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

#include <nlohmann/json.hpp>

#include <sstream>

namespace hardyops {

using nlohmann::json;

namespace {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorCode::Parse, "expected a [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::Parse, "malformed JSON");
  return j;
}

}  // namespace

json trigpoly_to_json(const TrigPoly& a) {
  json j;
  j["lo"] = a.lo();
  if (a.block_dim() == 1) {
    json coeffs = json::array();
    for (const Block& b : a.blocks()) coeffs.push_back(complex_to_json(b(0, 0)));
    j["coeffs"] = std::move(coeffs);
  } else {
    j["block_dim"] = a.block_dim();
    json coeffs = json::array();
    for (const Block& b : a.blocks()) {
      json block = json::array();
      for (Eigen::Index r = 0; r < b.rows(); ++r)
        for (Eigen::Index c = 0; c < b.cols(); ++c)
          block.push_back(complex_to_json(b(r, c)));
      coeffs.push_back(std::move(block));
    }
    j["coeffs"] = std::move(coeffs);
  }
  return j;
}

TrigPoly trigpoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("coeffs"))
    throw Error(ErrorCode::Parse, "symbol JSON needs \"lo\" and \"coeffs\"");
  const int lo = j.at("lo").get<int>();
  const json& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.empty())
    throw Error(ErrorCode::Parse, "\"coeffs\" must be a nonempty array");

  int d = j.contains("block_dim") ? j.at("block_dim").get<int>() : 1;
  if (d < 1) throw Error(ErrorCode::Parse, "block_dim must be >= 1");

  std::vector<Block> blocks;
  blocks.reserve(coeffs.size());
  if (d == 1 && coeffs[0].is_array() && coeffs[0].size() == 2 && coeffs[0][0].is_number()) {
    // scalar shorthand: each coefficient is a [re, im] pair
    for (const json& c : coeffs) {
      Block b(1, 1);
      b(0, 0) = complex_from_json(c);
      blocks.push_back(std::move(b));
    }
  } else {
    for (const json& c : coeffs) {
      if (!c.is_array() || static_cast<int>(c.size()) != d * d)
        throw Error(ErrorCode::Parse, "each coefficient block needs block_dim^2 entries");
      Block b(d, d);
      for (int r = 0; r < d; ++r)
        for (int col = 0; col < d; ++col)
          b(r, col) = complex_from_json(c[static_cast<std::size_t>(r * d + col)]);
      blocks.push_back(std::move(b));
    }
  }
  return TrigPoly(lo, std::move(blocks));
}

json matrix_to_json(const OperatorMatrix& a) {
  json j;
  switch (a.basis()) {
    case BasisKind::H2Window:
      j["basis"] = "H2";
      j["N"] = a.modes();
      break;
    case BasisKind::L2Window:
      j["basis"] = "L2";
      j["M"] = a.half_window();
      break;
    case BasisKind::ModelBasis:
      j["basis"] = "Ktheta";
      j["dim"] = a.modes();
      j["convention"] = a.convention();
      break;
  }
  j["block_dim"] = a.block_dim();
  json rows = json::array();
  for (Eigen::Index r = 0; r < a.data().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < a.data().cols(); ++c)
      row.push_back(complex_to_json(a.data()(r, c)));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

OperatorMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("rows"))
    throw Error(ErrorCode::Parse, "matrix JSON needs \"basis\" and \"rows\"");
  const std::string basis = j.at("basis").get<std::string>();
  const int d = j.contains("block_dim") ? j.at("block_dim").get<int>() : 1;

  const json& rows = j.at("rows");
  if (!rows.is_array() || rows.empty())
    throw Error(ErrorCode::Parse, "\"rows\" must be a nonempty array");
  const Eigen::Index side = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd data(side, side);
  for (Eigen::Index r = 0; r < side; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != side)
      throw Error(ErrorCode::Parse, "matrix rows must be square");
    for (Eigen::Index c = 0; c < side; ++c)
      data(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }

  if (basis == "H2") {
    const int n = j.contains("N") ? j.at("N").get<int>() : static_cast<int>(side) / d;
    return OperatorMatrix::h2(std::move(data), n, d);
  }
  if (basis == "L2") {
    const int m = j.contains("M") ? j.at("M").get<int>()
                                  : (static_cast<int>(side) / d - 1) / 2;
    return OperatorMatrix::l2(std::move(data), m, d);
  }
  if (basis == "Ktheta") {
    const int dim = j.contains("dim") ? j.at("dim").get<int>() : static_cast<int>(side);
    std::string convention =
        j.contains("convention") ? j.at("convention").get<std::string>() : "";
    return OperatorMatrix::model(std::move(data), dim, std::move(convention));
  }
  throw Error(ErrorCode::Parse, "unknown basis tag: " + basis);
}

std::string matrix_to_csv(const OperatorMatrix& a) {
  std::ostringstream out;
  out.precision(17);
  for (Eigen::Index r = 0; r < a.data().rows(); ++r) {
    for (Eigen::Index c = 0; c < a.data().cols(); ++c) {
      if (c > 0) out << ',';
      out << a.data()(r, c).real() << ',' << a.data()(r, c).imag();
    }
    out << '\n';
  }
  return out.str();
}

json blaschke_to_json(const BlaschkeSpec& spec) {
  json zeros = json::array();
  for (const Complex& z : spec.zeros) zeros.push_back(complex_to_json(z));
  json j;
  j["zeros"] = std::move(zeros);
  j["const"] = complex_to_json(spec.unimodular_const);
  return j;
}

BlaschkeSpec blaschke_from_json(const json& j) {
  if (!j.is_object() || !j.contains("zeros"))
    throw Error(ErrorCode::Parse, "Blaschke JSON needs \"zeros\"");
  BlaschkeSpec spec;
  for (const json& z : j.at("zeros")) spec.zeros.push_back(complex_from_json(z));
  if (j.contains("const")) spec.unimodular_const = complex_from_json(j.at("const"));
  if (j.contains("r_max")) spec.r_max = j.at("r_max").get<double>();
  spec.validate();
  return spec;
}

json report_to_json(const ClassReport& r) {
  json j;
  j["verdict"] = r.verdict;
  j["residual"] = r.residual;
  j["guard"] = r.guard;
  if (r.recovered) {
    json rec;
    rec["phi"] = trigpoly_to_json(r.recovered->phi);
    rec["psi"] = trigpoly_to_json(r.recovered->psi);
    for (const auto& [name, sym] : r.recovered_extra)
      rec[name] = trigpoly_to_json(sym);
    j["recovered"] = std::move(rec);
  } else {
    j["recovered"] = nullptr;
  }
  j["gauge_note"] = r.gauge_note;
  j["details"] = r.details;
  return j;
}

std::string trigpoly_to_json_string(const TrigPoly& a) { return trigpoly_to_json(a).dump(); }

TrigPoly trigpoly_from_json_string(const std::string& text) {
  return trigpoly_from_json(parse_text(text));
}

std::string matrix_to_json_string(const OperatorMatrix& a) { return matrix_to_json(a).dump(); }

OperatorMatrix matrix_from_json_string(const std::string& text) {
  return matrix_from_json(parse_text(text));
}

BlaschkeSpec blaschke_from_json_string(const std::string& text) {
  return blaschke_from_json(parse_text(text));
}

std::string report_to_json_string(const ClassReport& r) { return report_to_json(r).dump(2); }

}  // namespace hardyops
