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

#ifndef HARDYOPS_OPERATORS_HPP
#define HARDYOPS_OPERATORS_HPP

#include "hardyops/trigpoly.hpp"

#include <string>

namespace hardyops {

enum class BasisKind {
  H2Window,   // one-sided modes 0..N-1
  L2Window,   // two-sided modes -M..M
  ModelBasis  // orthonormal basis of a numerical model space
};

/// Dense complex matrix tagged with its basis convention. The scalar side is
/// modes * block_dim; mixing bases in arithmetic is rejected by the
/// consumers of these tags.
class OperatorMatrix {
public:
  static OperatorMatrix h2(Eigen::MatrixXcd data, int n_modes, int block_dim);
  static OperatorMatrix l2(Eigen::MatrixXcd data, int half_window, int block_dim);
  static OperatorMatrix model(Eigen::MatrixXcd data, int dim, std::string convention);

  BasisKind basis() const { return basis_; }
  /// Number of basis modes: N, 2M+1 or dim.
  int modes() const { return modes_; }
  /// Half window M; only valid for L2Window.
  int half_window() const;
  int block_dim() const { return block_dim_; }
  const Eigen::MatrixXcd& data() const { return data_; }
  const std::string& convention() const { return convention_; }

  /// d x d block at mode coordinates; H2/Model use 0-based j, L2 uses signed
  /// Fourier indices in [-M, M].
  Eigen::MatrixXcd block_at(int j, int k) const;

  OperatorMatrix adjoint() const;

private:
  OperatorMatrix(BasisKind basis, Eigen::MatrixXcd data, int modes, int block_dim,
                 std::string convention);

  BasisKind basis_;
  int modes_;
  int block_dim_;
  Eigen::MatrixXcd data_;
  std::string convention_;
};

/// Ordered symbol pair (phi, psi); order matters for paired operators.
struct SymbolPair {
  TrigPoly phi;
  TrigPoly psi;

  SymbolPair(TrigPoly phi_in, TrigPoly psi_in);
};

/// N-mode section with block entry (j,k) = phi_hat(j-k).
OperatorMatrix toeplitz_matrix(const TrigPoly& phi, int n);

/// N-mode section with block entry (j,k) = psi_hat(j+k); only nonnegative
/// Fourier indices of psi contribute.
OperatorMatrix hankel_matrix(const TrigPoly& psi, int n);

/// Sum of the two sections above.
OperatorMatrix toeplitz_plus_hankel(const TrigPoly& phi, const TrigPoly& psi, int n);

/// Two-sided section on modes -M..M with block entry (m,n) = phi_hat(m-n).
OperatorMatrix laurent_matrix(const TrigPoly& phi, int m);

/// Diagonal projections on the two-sided window: indices >= 0 and < 0.
OperatorMatrix projection_plus(int m, int block_dim = 1);
OperatorMatrix projection_minus(int m, int block_dim = 1);

/// Block entry (m,n) = phi_hat(m-n) for columns n >= 0, psi_hat(m-n) for
/// columns n < 0.
OperatorMatrix paired_matrix(const SymbolPair& pair, int m);

/// Row-split variant: phi rows m >= 0, psi rows m < 0.
OperatorMatrix transposed_paired_matrix(const SymbolPair& pair, int m);

/// Top-left (m,n >= 0) corner of a two-sided section, re-tagged as an
/// H2Window matrix with M+1 modes. The explicit conversion between bases.
OperatorMatrix h2_corner(const OperatorMatrix& a);

}  // namespace hardyops

#endif  // HARDYOPS_OPERATORS_HPP
