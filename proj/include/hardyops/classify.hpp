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

#ifndef HARDYOPS_CLASSIFY_HPP
#define HARDYOPS_CLASSIFY_HPP

#include "hardyops/operators.hpp"

#include <map>
#include <optional>
#include <string>

namespace hardyops {

/// Outcome of a structure test: verdict = (residual <= tol), the band
/// excluded at each boundary, recovered symbols (present only on a true
/// verdict), a note on the uniqueness class of the recovery, and named
/// intermediate residuals.
struct ClassReport {
  bool verdict = false;
  double residual = 0.0;
  int guard = 0;
  std::optional<SymbolPair> recovered;
  std::map<std::string, TrigPoly> recovered_extra;
  std::string gauge_note;
  std::map<std::string, double> details;
};

/// Diagonal constancy A(j+1,k+1) == A(j,k) over the full interior; recovers
/// the symbol window from the first row and column.
ClassReport test_toeplitz(const OperatorMatrix& a, double tol);

/// Anti-diagonal constancy A(j+1,k) == A(j,k+1); recovers the analytic
/// symbol representative from the first row extended by the last column.
ClassReport test_hankel(const OperatorMatrix& a, double tol);

/// Cross rule a(i-1,j) + a(i+1,j) == a(i,j-1) + a(i,j+1) on the interior,
/// plus the two operator-form conditions (shift-difference Toeplitz,
/// shift-compression Hankel) as named residuals.
ClassReport test_tph(const OperatorMatrix& a, double tol);

/// Minimum-norm least-squares split A(j,k) = t(j-k) + h(j+k). The section
/// null space is two-dimensional (constant and parity-alternating gauge);
/// the canonical representative is orthogonal to it.
ClassReport decompose_tph(const OperatorMatrix& a, double tol);

/// Orthonormal basis of the T+H section gauge: stacked coefficient vectors
/// [t_{-(n-1)}..t_{n-1}, h_0..h_{2n-2}] of length 4n-2, two columns.
Eigen::MatrixXd tph_gauge_basis(int n);

/// Stack a symbol pair into the coefficient layout used by decompose_tph and
/// tph_gauge_basis, one column per block entry (row-major p,q).
Eigen::MatrixXcd stack_tph_coefficients(const SymbolPair& th, int n);

/// Two-sided diagonal constancy split over column half-planes n >= 0 and
/// n <= -2.
ClassReport test_paired(const OperatorMatrix& x, double tol);

/// phi from the action on the constant function (column n = 0), psi from
/// column n = -1 shifted up by one index. Requires a true paired verdict.
SymbolPair recover_paired_symbols(const OperatorMatrix& x, double tol, int guard = 0);

/// Mirror of test_paired with the half-plane split on rows; recovery goes
/// through the adjoint and conjugates back.
ClassReport test_transposed_paired(const OperatorMatrix& x, double tol);

/// Inner function generating the numerical kernel of a Hankel section:
/// kernel via SVD at threshold tol * sigma_max, minimal-degree kernel
/// element normalized monic then to unit sup-norm estimate. The zero matrix
/// yields theta = 1.
TrigPoly hankel_kernel_inner(const OperatorMatrix& h, double tol);

/// Full scalar pipeline for a Toeplitz + non-injective Hankel section:
/// second difference -> Hankel check -> kernel inner function theta ->
/// A T_theta Toeplitz check recovering phi2 -> phi = conj_bar(theta) phi2 ->
/// remainder Hankel check recovering psi.
ClassReport noninjective_pipeline(const OperatorMatrix& a, double tol);

}  // namespace hardyops

#endif  // HARDYOPS_CLASSIFY_HPP
