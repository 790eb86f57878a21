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

#ifndef HARDYOPS_TRIGPOLY_HPP
#define HARDYOPS_TRIGPOLY_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hardyops {

using Complex = std::complex<double>;
using Block = Eigen::MatrixXcd;

enum class ErrorCode {
  InvalidArgument,
  Parse,
  DimensionMismatch,
  BasisMismatch,
  NotApplicable,
  Io,
  Internal,
};

/// Library-wide exception carrying a coarse error category. The C API maps
/// the category onto its status codes.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

/// A matrix-coefficient Laurent polynomial over a finite Fourier window
/// [lo, hi]. Coefficients are dense d x d complex blocks; d == 1 is the
/// scalar case. Values are immutable after construction and stored in
/// canonical form: leading/trailing all-zero blocks are trimmed, and the
/// zero polynomial occupies the single index 0.
class TrigPoly {
public:
  /// Zero polynomial with the given block dimension.
  explicit TrigPoly(int block_dim = 1);

  /// Coefficients blocks[i] sit at Fourier index lo + i. Throws on an empty
  /// list or ragged block dimensions.
  TrigPoly(int lo, std::vector<Block> blocks);

  /// Scalar constant c at index 0.
  static TrigPoly constant(Complex c);

  /// c * z^power (scalar).
  static TrigPoly monomial(int power, Complex c = Complex(1.0, 0.0));

  /// Scalar polynomial from a coefficient list starting at index lo.
  static TrigPoly scalar(int lo, const std::vector<Complex>& coeffs);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(blocks_.size()) - 1; }
  int block_dim() const { return block_dim_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  bool is_zero() const;
  bool is_analytic() const { return is_zero() || lo_ >= 0; }
  /// max(|lo|, |hi|); 0 for the zero polynomial.
  int degree_bound() const;

  /// Coefficient block at Fourier index n (zero block outside the window).
  Block coeff(int n) const;
  /// Scalar coefficient at index n; requires block_dim == 1.
  Complex scalar_coeff(int n) const;

  TrigPoly scaled(Complex s) const;

  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);

private:
  void canonicalize();

  int lo_;
  int block_dim_;
  std::vector<Block> blocks_;
};

/// Pointwise product a(z) * b(z) as a block convolution; a's blocks multiply
/// from the left. Windows add, then the result is canonicalized.
TrigPoly multiply(const TrigPoly& a, const TrigPoly& b);

/// The bar operation: coefficient at n becomes the conjugate transpose of
/// a's coefficient at -n.
TrigPoly conj_bar(const TrigPoly& a);

/// Index translation by k (multiplication by z^k).
TrigPoly shift(const TrigPoly& a, int k);

/// Sum of coeff(n) * t^n. Requires |t| = 1 within 1e-12.
Block evaluate(const TrigPoly& a, Complex t);

/// (analytic part: indices >= 0, co-analytic part: indices < 0). The two
/// components sum to the input exactly.
std::pair<TrigPoly, TrigPoly> split_plus_minus(const TrigPoly& a);

/// Max spectral norm of a over the grid-th roots of unity; a lower bound on
/// the sup norm, exact in the grid limit. Requires grid >= 2*(hi-lo) + 2.
double sup_norm_estimate(const TrigPoly& a, int grid);

/// Coefficient-wise comparison with absolute tolerance.
bool approx_equal(const TrigPoly& a, const TrigPoly& b, double tol = 1e-12);

/// Max absolute value over all coefficient entries.
double max_coeff_abs(const TrigPoly& a);

/// Zero out coefficient entries with modulus <= tol and re-canonicalize.
/// Used when reading symbols back from floating-point data.
TrigPoly trim(const TrigPoly& a, double tol);

}  // namespace hardyops

#endif  // HARDYOPS_TRIGPOLY_HPP
