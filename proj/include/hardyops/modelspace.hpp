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

#ifndef HARDYOPS_MODELSPACE_HPP
#define HARDYOPS_MODELSPACE_HPP

#include "hardyops/classify.hpp"

#include <vector>

namespace hardyops {

/// Finite Blaschke product: zeros in the open disc (repetition encodes
/// multiplicity) and a unimodular constant. Zeros are capped at r_max for
/// truncation-error control.
struct BlaschkeSpec {
  std::vector<Complex> zeros;
  Complex unimodular_const = Complex(1.0, 0.0);
  double r_max = 0.95;

  int degree() const { return static_cast<int>(zeros.size()); }
  void validate() const;
};

struct BlaschkeCoeffs {
  TrigPoly theta;     // analytic window [0, n-1]
  double tail_bound;  // |1 - sum |theta_hat|^2|, the truncation tail
};

/// Taylor coefficients of the Blaschke product to order n-1; each factor
/// (z - a) / (1 - conj(a) z) is expanded by exact geometric division.
BlaschkeCoeffs blaschke_coeffs(const BlaschkeSpec& spec, int n);

struct ModelProjections {
  OperatorMatrix p_model;     // P onto the model space K_theta
  OperatorMatrix p_theta_h2;  // P onto theta H^2 = T_theta T_theta^*
};

/// Both projections on the n-mode window; exact sections for polynomial
/// theta since T_theta is lower triangular.
ModelProjections model_projection(const TrigPoly& theta, int n);

/// Deterministic orthonormal basis of the numerical range of a model
/// projection: eigenvectors for eigenvalues near 1, ordered by the index of
/// their largest component, phase-fixed so that component is real positive.
/// An exact 0/1 diagonal projection yields coordinate vectors bit-for-bit.
/// expected_dim >= 0 asserts the rank; -1 derives it from the spectrum, and
/// eigenvalues away from {0, 1} are rejected as an ambiguous range.
Eigen::MatrixXcd model_basis(const OperatorMatrix& p_model, int expected_dim);

/// Compression of the multiplication section to the model space, expressed
/// in the model_basis columns. Errors when the numerical rank of P_K does
/// not match deg theta (n too small).
OperatorMatrix truncated_toeplitz(const TrigPoly& phi, const TrigPoly& theta, int n);

/// theta-paired data: nonconstant analytic inner theta and analytic ordered
/// symbols.
struct ThetaPairedSpec {
  TrigPoly theta;
  TrigPoly phi;
  TrigPoly psi;

  ThetaPairedSpec(TrigPoly theta_in, TrigPoly phi_in, TrigPoly psi_in);
};

/// T_phi P_{theta H^2} + T_psi P_{K_theta} on the n-mode window.
OperatorMatrix theta_paired_matrix(const ThetaPairedSpec& spec, int n);

/// Invariance of theta H^2 under X, the eigenvalue relation X h0 = nu h0 on
/// the reproducing-kernel element h0 = P_K (1 - conj(theta(0)) theta), and
/// the commutator identity [X, T_z] = (X - T_nu) P_{theta H^2} T_z P_K, all
/// on a guard-banded window. guard < 0 derives the band from the effective
/// degree of theta and the recovered nu.
ClassReport test_theta_paired(const OperatorMatrix& x, const TrigPoly& theta,
                              double tol, int guard = -1);

/// (phi, psi) with phi the analytic part of conj_bar(theta) * (X theta) and
/// psi = nu from the test. Requires a true verdict.
SymbolPair recover_theta_paired_symbols(const OperatorMatrix& x, const TrigPoly& theta,
                                        double tol, int guard = -1);

}  // namespace hardyops

#endif  // HARDYOPS_MODELSPACE_HPP
