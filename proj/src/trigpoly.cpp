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

#include "hardyops/trigpoly.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace hardyops {

namespace {

bool block_is_exact_zero(const Block& b) {
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (b(i, j) != Complex(0.0, 0.0)) return false;
  return true;
}

}  // namespace

TrigPoly::TrigPoly(int block_dim) : lo_(0), block_dim_(block_dim) {
  if (block_dim < 1)
    throw Error(ErrorCode::InvalidArgument, "block_dim must be >= 1");
  blocks_.push_back(Block::Zero(block_dim, block_dim));
}

TrigPoly::TrigPoly(int lo, std::vector<Block> blocks) : lo_(lo) {
  if (blocks.empty())
    throw Error(ErrorCode::InvalidArgument, "coefficient list must be nonempty");
  const Eigen::Index d = blocks.front().rows();
  if (d < 1 || blocks.front().cols() != d)
    throw Error(ErrorCode::InvalidArgument, "coefficient blocks must be square");
  for (const Block& b : blocks)
    if (b.rows() != d || b.cols() != d)
      throw Error(ErrorCode::DimensionMismatch, "ragged coefficient block dimensions");
  block_dim_ = static_cast<int>(d);
  blocks_ = std::move(blocks);
  canonicalize();
}

TrigPoly TrigPoly::constant(Complex c) {
  Block b(1, 1);
  b(0, 0) = c;
  return TrigPoly(0, {b});
}

TrigPoly TrigPoly::monomial(int power, Complex c) {
  Block b(1, 1);
  b(0, 0) = c;
  return TrigPoly(power, {b});
}

TrigPoly TrigPoly::scalar(int lo, const std::vector<Complex>& coeffs) {
  std::vector<Block> blocks;
  blocks.reserve(coeffs.size());
  for (Complex c : coeffs) {
    Block b(1, 1);
    b(0, 0) = c;
    blocks.push_back(std::move(b));
  }
  return TrigPoly(lo, std::move(blocks));
}

void TrigPoly::canonicalize() {
  std::size_t first = 0;
  while (first < blocks_.size() && block_is_exact_zero(blocks_[first])) ++first;
  if (first == blocks_.size()) {
    // zero polynomial: single zero block at index 0
    blocks_.assign(1, Block::Zero(block_dim_, block_dim_));
    lo_ = 0;
    return;
  }
  std::size_t last = blocks_.size() - 1;
  while (last > first && block_is_exact_zero(blocks_[last])) --last;
  if (first > 0 || last + 1 < blocks_.size()) {
    std::vector<Block> trimmed(blocks_.begin() + static_cast<std::ptrdiff_t>(first),
                               blocks_.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    blocks_ = std::move(trimmed);
    lo_ += static_cast<int>(first);
  }
}

bool TrigPoly::is_zero() const {
  return blocks_.size() == 1 && block_is_exact_zero(blocks_.front());
}

int TrigPoly::degree_bound() const {
  if (is_zero()) return 0;
  return std::max(std::abs(lo()), std::abs(hi()));
}

Block TrigPoly::coeff(int n) const {
  if (n < lo_ || n > hi()) return Block::Zero(block_dim_, block_dim_);
  return blocks_[static_cast<std::size_t>(n - lo_)];
}

Complex TrigPoly::scalar_coeff(int n) const {
  if (block_dim_ != 1)
    throw Error(ErrorCode::InvalidArgument, "scalar_coeff requires block_dim == 1");
  if (n < lo_ || n > hi()) return Complex(0.0, 0.0);
  return blocks_[static_cast<std::size_t>(n - lo_)](0, 0);
}

TrigPoly TrigPoly::scaled(Complex s) const {
  std::vector<Block> out;
  out.reserve(blocks_.size());
  for (const Block& b : blocks_) out.push_back(s * b);
  return TrigPoly(lo_, std::move(out));
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  if (a.block_dim() != b.block_dim())
    throw Error(ErrorCode::DimensionMismatch, "block_dim mismatch in symbol sum");
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  std::vector<Block> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) out.push_back(a.coeff(n) + b.coeff(n));
  return TrigPoly(lo, std::move(out));
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) {
  return a + b.scaled(Complex(-1.0, 0.0));
}

TrigPoly multiply(const TrigPoly& a, const TrigPoly& b) {
  if (a.block_dim() != b.block_dim())
    throw Error(ErrorCode::DimensionMismatch, "block_dim mismatch in symbol product");
  const int d = a.block_dim();
  const int lo = a.lo() + b.lo();
  const int hi = a.hi() + b.hi();
  std::vector<Block> out(static_cast<std::size_t>(hi - lo + 1), Block::Zero(d, d));
  for (int i = a.lo(); i <= a.hi(); ++i) {
    const Block& ai = a.blocks()[static_cast<std::size_t>(i - a.lo())];
    for (int j = b.lo(); j <= b.hi(); ++j) {
      out[static_cast<std::size_t>(i + j - lo)] +=
          ai * b.blocks()[static_cast<std::size_t>(j - b.lo())];
    }
  }
  return TrigPoly(lo, std::move(out));
}

TrigPoly conj_bar(const TrigPoly& a) {
  std::vector<Block> out;
  out.reserve(a.blocks().size());
  for (int n = a.hi(); n >= a.lo(); --n)
    out.push_back(a.coeff(n).adjoint());
  return TrigPoly(-a.hi(), std::move(out));
}

TrigPoly shift(const TrigPoly& a, int k) {
  return TrigPoly(a.lo() + k, a.blocks());
}

Block evaluate(const TrigPoly& a, Complex t) {
  if (std::abs(std::abs(t) - 1.0) > 1e-12)
    throw Error(ErrorCode::InvalidArgument, "evaluation point is off the unit circle");
  Block acc = Block::Zero(a.block_dim(), a.block_dim());
  Complex p = std::pow(t, a.lo());
  for (int n = a.lo(); n <= a.hi(); ++n) {
    acc += p * a.blocks()[static_cast<std::size_t>(n - a.lo())];
    p *= t;
  }
  return acc;
}

std::pair<TrigPoly, TrigPoly> split_plus_minus(const TrigPoly& a) {
  const int d = a.block_dim();
  TrigPoly plus(d), minus(d);
  if (a.hi() >= 0) {
    const int lo = std::max(a.lo(), 0);
    std::vector<Block> blocks;
    for (int n = lo; n <= a.hi(); ++n) blocks.push_back(a.coeff(n));
    plus = TrigPoly(lo, std::move(blocks));
  }
  if (a.lo() < 0) {
    const int hi = std::min(a.hi(), -1);
    std::vector<Block> blocks;
    for (int n = a.lo(); n <= hi; ++n) blocks.push_back(a.coeff(n));
    minus = TrigPoly(a.lo(), std::move(blocks));
  }
  return {plus, minus};
}

double sup_norm_estimate(const TrigPoly& a, int grid) {
  const int width = a.hi() - a.lo();
  if (grid < 2 * width + 2)
    throw Error(ErrorCode::InvalidArgument,
                "grid too small for the symbol window: need >= 2*(hi-lo)+2");
  double best = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(grid);
    const Block v = evaluate(a, Complex(std::cos(ang), std::sin(ang)));
    double norm;
    if (a.block_dim() == 1) {
      norm = std::abs(v(0, 0));
    } else {
      Eigen::JacobiSVD<Block> svd(v);
      norm = svd.singularValues()(0);
    }
    best = std::max(best, norm);
  }
  return best;
}

bool approx_equal(const TrigPoly& a, const TrigPoly& b, double tol) {
  if (a.block_dim() != b.block_dim()) return false;
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  for (int n = lo; n <= hi; ++n)
    if (((a.coeff(n) - b.coeff(n)).cwiseAbs().maxCoeff()) > tol) return false;
  return true;
}

double max_coeff_abs(const TrigPoly& a) {
  double best = 0.0;
  for (const Block& b : a.blocks()) best = std::max(best, b.cwiseAbs().maxCoeff());
  return best;
}

TrigPoly trim(const TrigPoly& a, double tol) {
  std::vector<Block> out;
  out.reserve(a.blocks().size());
  for (const Block& b : a.blocks()) {
    Block c = b;
    for (Eigen::Index i = 0; i < c.rows(); ++i)
      for (Eigen::Index j = 0; j < c.cols(); ++j)
        if (std::abs(c(i, j)) <= tol) c(i, j) = Complex(0.0, 0.0);
    out.push_back(std::move(c));
  }
  return TrigPoly(a.lo(), std::move(out));
}

}  // namespace hardyops
