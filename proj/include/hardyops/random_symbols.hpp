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

#ifndef HARDYOPS_RANDOM_SYMBOLS_HPP
#define HARDYOPS_RANDOM_SYMBOLS_HPP

#include "hardyops/trigpoly.hpp"

#include <cstdint>
#include <random>

namespace hardyops {

/// Seeded generator for test fixtures. Uniform doubles are derived from the
/// raw 64-bit stream directly so sequences are identical across standard
/// library implementations.
class SymbolRng {
public:
  explicit SymbolRng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [-1, 1].
  double uniform_sym() { return 2.0 * uniform() - 1.0; }

  Complex complex_sym() { return Complex(uniform_sym(), uniform_sym()); }

  std::uint64_t raw() { return eng_(); }

  /// Dense random symbol on the window [lo, hi] with entries uniform in the
  /// unit square.
  TrigPoly symbol(int lo, int hi, int block_dim = 1);

  /// Random symbol with max absolute Fourier index <= max_abs_deg.
  TrigPoly symbol_window(int max_abs_deg, int block_dim = 1);

  /// Random analytic symbol on [0, deg].
  TrigPoly analytic_symbol(int deg, int block_dim = 1);

  Eigen::VectorXcd vector(int n);

  Eigen::MatrixXcd dense_matrix(int rows, int cols);

private:
  std::mt19937_64 eng_;
};

}  // namespace hardyops

#endif  // HARDYOPS_RANDOM_SYMBOLS_HPP
