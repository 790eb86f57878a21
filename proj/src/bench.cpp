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

#include "hardyops/bench.hpp"

#include "hardyops/fast_apply.hpp"
#include "hardyops/random_symbols.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>

namespace hardyops {

namespace {

constexpr int kDenseLimit = 8192;  // dense materialization cap (memory)

// Exact windowed summation; the FFT-free reference used above the dense cap.
Eigen::VectorXcd direct_tph_apply(const SymbolPair& pair, const Eigen::VectorXcd& x) {
  const int n = static_cast<int>(x.size());
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(n);
  for (int j = 0; j < n; ++j) {
    Complex acc(0.0, 0.0);
    for (int k = std::max(0, j - pair.phi.hi()); k <= std::min(n - 1, j - pair.phi.lo()); ++k)
      acc += pair.phi.scalar_coeff(j - k) * x(k);
    for (int k = std::max(0, pair.psi.lo() - j); k <= std::min(n - 1, pair.psi.hi() - j); ++k)
      acc += pair.psi.scalar_coeff(j + k) * x(k);
    y(j) = acc;
  }
  return y;
}

template <typename Fn>
double time_ms(Fn&& fn) {
  using clock = std::chrono::steady_clock;
  // Calibrate the repeat count so each sample spans at least ~20 ms, then
  // keep the best of three samples.
  auto once = [&] {
    const auto t0 = clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };
  double est = once();
  const int reps = est >= 20.0 ? 1 : static_cast<int>(std::ceil(20.0 / std::max(est, 1e-4)));
  double best = est;
  for (int sample = 0; sample < 3; ++sample) {
    const auto t0 = clock::now();
    for (int r = 0; r < reps; ++r) fn();
    const double ms =
        std::chrono::duration<double, std::milli>(clock::now() - t0).count() / reps;
    best = std::min(best, ms);
  }
  return best;
}

}  // namespace

std::vector<BenchRow> bench_fast_paths(const std::vector<int>& sizes, std::uint64_t seed) {
  SymbolRng rng(seed);
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "bench size must be >= 1");
    const SymbolPair pair(rng.symbol_window(std::min(8, std::max(0, n - 1))),
                          rng.analytic_symbol(std::min(8, std::max(0, n - 1))));
    const Eigen::VectorXcd x = rng.vector(n);

    BenchRow row;
    row.n = n;

    Eigen::VectorXcd fast = fast_apply_tph(pair, x).y;
    Eigen::VectorXcd reference;
    Eigen::MatrixXcd dense;
    if (n <= kDenseLimit) {
      dense = toeplitz_plus_hankel(pair.phi, pair.psi, n).data();
      reference = dense * x;
      row.dense_timed = true;
    } else {
      reference = direct_tph_apply(pair, x);
    }

    const double scale = std::max(1.0, reference.cwiseAbs().maxCoeff());
    row.max_rel_err = (fast - reference).cwiseAbs().maxCoeff() / scale;
    if (row.max_rel_err > 1e-10)
      throw Error(ErrorCode::Internal,
                  "fast/dense disagreement at N=" + std::to_string(n) +
                      "; benchmark aborted");

    volatile double sink = 0.0;
    row.fast_ms = time_ms([&] {
      const Eigen::VectorXcd y = fast_apply_tph(pair, x).y;
      sink = sink + y(0).real();
    });
    if (row.dense_timed) {
      Eigen::VectorXcd y(n);
      row.dense_ms = time_ms([&] {
        y.noalias() = dense * x;
        sink = sink + y(0).real();
      });
    }
    rows.push_back(row);
  }
  return rows;
}

std::string bench_to_json_string(const std::vector<BenchRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BenchRow& r : rows) {
    nlohmann::json j;
    j["N"] = r.n;
    j["fast_ms"] = r.fast_ms;
    j["max_rel_err"] = r.max_rel_err;
    if (r.dense_timed) {
      j["dense_ms"] = r.dense_ms;
      j["speedup"] = r.fast_ms > 0.0 ? r.dense_ms / r.fast_ms : 0.0;
    } else {
      j["dense_ms"] = nullptr;
      j["speedup"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  nlohmann::json out;
  out["results"] = std::move(arr);
  return out.dump(2);
}

}  // namespace hardyops
