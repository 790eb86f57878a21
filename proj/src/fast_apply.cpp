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

#include "hardyops/fast_apply.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <vector>

namespace hardyops {

namespace {

int next_pow2_ge(int x) {
  int p = 1;
  while (p < x) p <<= 1;
  return p;
}

// y = C x with C the L-circulant whose first column is col, restricted to
// the leading n entries. The embedding is exact: col carries the Toeplitz
// diagonals and L >= 2n keeps wrap-around terms out of the output window.
Eigen::VectorXcd circulant_apply(const std::vector<Complex>& col,
                                 const Eigen::VectorXcd& x, int n) {
  const int ell = static_cast<int>(col.size());
  std::vector<Complex> xp(static_cast<std::size_t>(ell), Complex(0.0, 0.0));
  for (int i = 0; i < n; ++i) xp[static_cast<std::size_t>(i)] = x(i);

  Eigen::FFT<double> fft;
  std::vector<Complex> fc, fx;
  fft.fwd(fc, col);
  fft.fwd(fx, xp);
  for (int i = 0; i < ell; ++i)
    fx[static_cast<std::size_t>(i)] *= fc[static_cast<std::size_t>(i)];
  std::vector<Complex> prod;
  fft.inv(prod, fx);

  Eigen::VectorXcd y(n);
  for (int i = 0; i < n; ++i) y(i) = prod[static_cast<std::size_t>(i)];
  return y;
}

Eigen::VectorXcd toeplitz_fft(const TrigPoly& phi, const Eigen::VectorXcd& x) {
  const int n = static_cast<int>(x.size());
  const int ell = next_pow2_ge(2 * n);
  std::vector<Complex> col(static_cast<std::size_t>(ell), Complex(0.0, 0.0));
  const int hi = std::min(phi.hi(), n - 1);
  for (int m = std::max(phi.lo(), 0); m <= hi; ++m)
    col[static_cast<std::size_t>(m)] = phi.scalar_coeff(m);
  const int lo = std::max(phi.lo(), -(n - 1));
  for (int m = -1; m >= lo; --m)
    col[static_cast<std::size_t>(ell + m)] = phi.scalar_coeff(m);
  return circulant_apply(col, x, n);
}

Eigen::VectorXcd hankel_fft(const TrigPoly& psi, const Eigen::VectorXcd& x) {
  // H_psi x = T_tau (reverse x) with tau(r) = psi(r + n - 1); only indices
  // psi(s), 0 <= s <= 2n-2 reach the section.
  const int n = static_cast<int>(x.size());
  const int ell = next_pow2_ge(2 * n);
  std::vector<Complex> col(static_cast<std::size_t>(ell), Complex(0.0, 0.0));
  for (int m = 0; m <= n - 1; ++m) {
    const int s = m + n - 1;
    if (s >= psi.lo() && s <= psi.hi()) col[static_cast<std::size_t>(m)] = psi.scalar_coeff(s);
  }
  for (int m = 1; m <= n - 1; ++m) {
    const int s = n - 1 - m;
    if (s >= std::max(psi.lo(), 0) && s <= psi.hi())
      col[static_cast<std::size_t>(ell - m)] = psi.scalar_coeff(s);
  }
  return circulant_apply(col, x.reverse(), n);
}

void check_input(const TrigPoly& sym, const Eigen::VectorXcd& x) {
  if (x.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty input vector");
  if (x.size() % sym.block_dim() != 0)
    throw Error(ErrorCode::DimensionMismatch,
                "vector length is not a multiple of block_dim");
}

}  // namespace

FastApplyResult fast_apply_toeplitz(const TrigPoly& phi, const Eigen::VectorXcd& x) {
  check_input(phi, x);
  if (phi.block_dim() > 1) {
    const int n = static_cast<int>(x.size()) / phi.block_dim();
    return {toeplitz_matrix(phi, n).data() * x, false};
  }
  return {toeplitz_fft(phi, x), true};
}

FastApplyResult fast_apply_hankel(const TrigPoly& psi, const Eigen::VectorXcd& x) {
  check_input(psi, x);
  if (psi.block_dim() > 1) {
    const int n = static_cast<int>(x.size()) / psi.block_dim();
    return {hankel_matrix(psi, n).data() * x, false};
  }
  return {hankel_fft(psi, x), true};
}

FastApplyResult fast_apply_tph(const SymbolPair& pair, const Eigen::VectorXcd& x) {
  check_input(pair.phi, x);
  if (pair.phi.block_dim() > 1) {
    const int n = static_cast<int>(x.size()) / pair.phi.block_dim();
    return {toeplitz_plus_hankel(pair.phi, pair.psi, n).data() * x, false};
  }
  return {toeplitz_fft(pair.phi, x) + hankel_fft(pair.psi, x), true};
}

}  // namespace hardyops
