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

#include "hardyops/operators.hpp"

namespace hardyops {

OperatorMatrix::OperatorMatrix(BasisKind basis, Eigen::MatrixXcd data, int modes,
                               int block_dim, std::string convention)
    : basis_(basis),
      modes_(modes),
      block_dim_(block_dim),
      data_(std::move(data)),
      convention_(std::move(convention)) {
  if (modes_ < 1) throw Error(ErrorCode::InvalidArgument, "matrix needs >= 1 mode");
  if (block_dim_ < 1) throw Error(ErrorCode::InvalidArgument, "block_dim must be >= 1");
  const Eigen::Index side = static_cast<Eigen::Index>(modes_) * block_dim_;
  if (data_.rows() != side || data_.cols() != side)
    throw Error(ErrorCode::DimensionMismatch,
                "matrix side does not match basis size times block_dim");
}

OperatorMatrix OperatorMatrix::h2(Eigen::MatrixXcd data, int n_modes, int block_dim) {
  return OperatorMatrix(BasisKind::H2Window, std::move(data), n_modes, block_dim, "");
}

OperatorMatrix OperatorMatrix::l2(Eigen::MatrixXcd data, int half_window, int block_dim) {
  if (half_window < 1)
    throw Error(ErrorCode::InvalidArgument, "two-sided window needs M >= 1");
  return OperatorMatrix(BasisKind::L2Window, std::move(data), 2 * half_window + 1,
                        block_dim, "");
}

OperatorMatrix OperatorMatrix::model(Eigen::MatrixXcd data, int dim, std::string convention) {
  return OperatorMatrix(BasisKind::ModelBasis, std::move(data), dim, 1,
                        std::move(convention));
}

int OperatorMatrix::half_window() const {
  if (basis_ != BasisKind::L2Window)
    throw Error(ErrorCode::BasisMismatch, "half_window is defined on L2 windows only");
  return (modes_ - 1) / 2;
}

Eigen::MatrixXcd OperatorMatrix::block_at(int j, int k) const {
  int rj = j, rk = k;
  if (basis_ == BasisKind::L2Window) {
    const int m = half_window();
    rj += m;
    rk += m;
  }
  if (rj < 0 || rj >= modes_ || rk < 0 || rk >= modes_)
    throw Error(ErrorCode::InvalidArgument, "block coordinates out of range");
  return data_.block(static_cast<Eigen::Index>(rj) * block_dim_,
                     static_cast<Eigen::Index>(rk) * block_dim_, block_dim_, block_dim_);
}

OperatorMatrix OperatorMatrix::adjoint() const {
  return OperatorMatrix(basis_, data_.adjoint(), modes_, block_dim_, convention_);
}

SymbolPair::SymbolPair(TrigPoly phi_in, TrigPoly psi_in)
    : phi(std::move(phi_in)), psi(std::move(psi_in)) {
  if (phi.block_dim() != psi.block_dim())
    throw Error(ErrorCode::DimensionMismatch, "symbol pair block_dim mismatch");
}

OperatorMatrix toeplitz_matrix(const TrigPoly& phi, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "section size must be >= 1");
  const int d = phi.block_dim();
  Eigen::MatrixXcd data = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n) * d,
                                                 static_cast<Eigen::Index>(n) * d);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const int s = j - k;
      if (s < phi.lo() || s > phi.hi()) continue;
      data.block(static_cast<Eigen::Index>(j) * d, static_cast<Eigen::Index>(k) * d, d, d) =
          phi.coeff(s);
    }
  return OperatorMatrix::h2(std::move(data), n, d);
}

OperatorMatrix hankel_matrix(const TrigPoly& psi, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "section size must be >= 1");
  const int d = psi.block_dim();
  Eigen::MatrixXcd data = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n) * d,
                                                 static_cast<Eigen::Index>(n) * d);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const int s = j + k;  // negative indices of psi never contribute
      if (s < psi.lo() || s > psi.hi()) continue;
      data.block(static_cast<Eigen::Index>(j) * d, static_cast<Eigen::Index>(k) * d, d, d) =
          psi.coeff(s);
    }
  return OperatorMatrix::h2(std::move(data), n, d);
}

OperatorMatrix toeplitz_plus_hankel(const TrigPoly& phi, const TrigPoly& psi, int n) {
  if (phi.block_dim() != psi.block_dim())
    throw Error(ErrorCode::DimensionMismatch, "block_dim mismatch");
  OperatorMatrix t = toeplitz_matrix(phi, n);
  OperatorMatrix h = hankel_matrix(psi, n);
  return OperatorMatrix::h2(t.data() + h.data(), n, phi.block_dim());
}

OperatorMatrix laurent_matrix(const TrigPoly& phi, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "two-sided window needs M >= 1");
  const int d = phi.block_dim();
  const int modes = 2 * m + 1;
  Eigen::MatrixXcd data = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(modes) * d,
                                                 static_cast<Eigen::Index>(modes) * d);
  for (int r = 0; r < modes; ++r)
    for (int c = 0; c < modes; ++c) {
      const int s = r - c;  // (row index) - (col index) equals m - n
      if (s < phi.lo() || s > phi.hi()) continue;
      data.block(static_cast<Eigen::Index>(r) * d, static_cast<Eigen::Index>(c) * d, d, d) =
          phi.coeff(s);
    }
  return OperatorMatrix::l2(std::move(data), m, d);
}

namespace {

OperatorMatrix projection_impl(int m, int block_dim, bool plus) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "two-sided window needs M >= 1");
  const int modes = 2 * m + 1;
  const Eigen::Index side = static_cast<Eigen::Index>(modes) * block_dim;
  Eigen::MatrixXcd data = Eigen::MatrixXcd::Zero(side, side);
  for (int idx = -m; idx <= m; ++idx) {
    const bool keep = plus ? (idx >= 0) : (idx < 0);
    if (!keep) continue;
    const Eigen::Index at = static_cast<Eigen::Index>(idx + m) * block_dim;
    data.block(at, at, block_dim, block_dim) =
        Eigen::MatrixXcd::Identity(block_dim, block_dim);
  }
  return OperatorMatrix::l2(std::move(data), m, block_dim);
}

}  // namespace

OperatorMatrix projection_plus(int m, int block_dim) {
  return projection_impl(m, block_dim, true);
}

OperatorMatrix projection_minus(int m, int block_dim) {
  return projection_impl(m, block_dim, false);
}

OperatorMatrix paired_matrix(const SymbolPair& pair, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "two-sided window needs M >= 1");
  const int d = pair.phi.block_dim();
  const int modes = 2 * m + 1;
  Eigen::MatrixXcd data = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(modes) * d,
                                                 static_cast<Eigen::Index>(modes) * d);
  for (int row = -m; row <= m; ++row)
    for (int col = -m; col <= m; ++col) {
      const TrigPoly& sym = (col >= 0) ? pair.phi : pair.psi;
      const int s = row - col;
      if (s < sym.lo() || s > sym.hi()) continue;
      data.block(static_cast<Eigen::Index>(row + m) * d,
                 static_cast<Eigen::Index>(col + m) * d, d, d) = sym.coeff(s);
    }
  return OperatorMatrix::l2(std::move(data), m, d);
}

OperatorMatrix transposed_paired_matrix(const SymbolPair& pair, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "two-sided window needs M >= 1");
  const int d = pair.phi.block_dim();
  const int modes = 2 * m + 1;
  Eigen::MatrixXcd data = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(modes) * d,
                                                 static_cast<Eigen::Index>(modes) * d);
  for (int row = -m; row <= m; ++row)
    for (int col = -m; col <= m; ++col) {
      const TrigPoly& sym = (row >= 0) ? pair.phi : pair.psi;
      const int s = row - col;
      if (s < sym.lo() || s > sym.hi()) continue;
      data.block(static_cast<Eigen::Index>(row + m) * d,
                 static_cast<Eigen::Index>(col + m) * d, d, d) = sym.coeff(s);
    }
  return OperatorMatrix::l2(std::move(data), m, d);
}

OperatorMatrix h2_corner(const OperatorMatrix& a) {
  if (a.basis() != BasisKind::L2Window)
    throw Error(ErrorCode::BasisMismatch, "h2_corner expects a two-sided window");
  const int m = a.half_window();
  const int d = a.block_dim();
  const Eigen::Index off = static_cast<Eigen::Index>(m) * d;
  const Eigen::Index side = static_cast<Eigen::Index>(m + 1) * d;
  return OperatorMatrix::h2(a.data().block(off, off, side, side), m + 1, d);
}

}  // namespace hardyops
