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

#ifndef HARDYOPS_JSON_IO_HPP
#define HARDYOPS_JSON_IO_HPP

#include "hardyops/classify.hpp"
#include "hardyops/modelspace.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace hardyops {

// Symbol format: {"block_dim": d, "lo": n, "coeffs": [block, ...]} with each
// block a row-major list of d*d [re, im] pairs. Scalar shorthand:
// {"lo": n, "coeffs": [[re, im], ...]}.
nlohmann::json trigpoly_to_json(const TrigPoly& a);
TrigPoly trigpoly_from_json(const nlohmann::json& j);

// Matrix format: {"basis": "H2"|"L2"|"Ktheta", "N"|"M"|"dim": int,
// "block_dim": d, "rows": [[[re,im], ...], ...]}.
nlohmann::json matrix_to_json(const OperatorMatrix& a);
OperatorMatrix matrix_from_json(const nlohmann::json& j);

/// CSV export with re,im interleaved per scalar entry.
std::string matrix_to_csv(const OperatorMatrix& a);

// Blaschke format: {"zeros": [[re,im], ...], "const": [re,im]}.
nlohmann::json blaschke_to_json(const BlaschkeSpec& spec);
BlaschkeSpec blaschke_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ClassReport& r);

// String entry points used by the C layer.
std::string trigpoly_to_json_string(const TrigPoly& a);
TrigPoly trigpoly_from_json_string(const std::string& text);
std::string matrix_to_json_string(const OperatorMatrix& a);
OperatorMatrix matrix_from_json_string(const std::string& text);
BlaschkeSpec blaschke_from_json_string(const std::string& text);
std::string report_to_json_string(const ClassReport& r);

}  // namespace hardyops

#endif  // HARDYOPS_JSON_IO_HPP
