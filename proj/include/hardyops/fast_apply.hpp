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

#ifndef HARDYOPS_FAST_APPLY_HPP
#define HARDYOPS_FAST_APPLY_HPP

#include "hardyops/operators.hpp"

namespace hardyops {

/// Result of a fast matrix-vector product. used_fft is false when the input
/// was routed to the dense fallback (block symbols).
struct FastApplyResult {
  Eigen::VectorXcd y;
  bool used_fft = true;
};

/// y = T_phi x on the N-mode window, N = x.size() / block_dim. Scalar
/// symbols go through a circulant embedding of size the smallest power of
/// two >= 2N; block symbols fall back to the dense section.
FastApplyResult fast_apply_toeplitz(const TrigPoly& phi, const Eigen::VectorXcd& x);

/// y = H_psi x; the Hankel product is a Toeplitz product with shifted symbol
/// applied to the reversed vector.
FastApplyResult fast_apply_hankel(const TrigPoly& psi, const Eigen::VectorXcd& x);

/// y = (T_phi + H_psi) x.
FastApplyResult fast_apply_tph(const SymbolPair& pair, const Eigen::VectorXcd& x);

}  // namespace hardyops

#endif  // HARDYOPS_FAST_APPLY_HPP
