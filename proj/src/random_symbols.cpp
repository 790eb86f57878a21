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

#include "hardyops/random_symbols.hpp"

namespace hardyops {

TrigPoly SymbolRng::symbol(int lo, int hi, int block_dim) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty symbol window");
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) {
    Block b(block_dim, block_dim);
    for (int r = 0; r < block_dim; ++r)
      for (int c = 0; c < block_dim; ++c) b(r, c) = complex_sym();
    blocks.push_back(std::move(b));
  }
  return TrigPoly(lo, std::move(blocks));
}

TrigPoly SymbolRng::symbol_window(int max_abs_deg, int block_dim) {
  return symbol(-max_abs_deg, max_abs_deg, block_dim);
}

TrigPoly SymbolRng::analytic_symbol(int deg, int block_dim) {
  return symbol(0, deg, block_dim);
}

Eigen::VectorXcd SymbolRng::vector(int n) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = complex_sym();
  return v;
}

Eigen::MatrixXcd SymbolRng::dense_matrix(int rows, int cols) {
  Eigen::MatrixXcd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = complex_sym();
  return m;
}

}  // namespace hardyops
