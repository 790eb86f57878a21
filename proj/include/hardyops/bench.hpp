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

#ifndef HARDYOPS_BENCH_HPP
#define HARDYOPS_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hardyops {

struct BenchRow {
  int n = 0;
  double dense_ms = 0.0;     // valid only when dense_timed
  double fast_ms = 0.0;
  double max_rel_err = 0.0;  // fast vs reference
  bool dense_timed = false;  // dense matvec is skipped above 8192 modes
};

/// Times the FFT fast path against a materialized dense matvec for each
/// size. Result agreement within 1e-10 relative is checked before timing
/// and a mismatch throws; sizes above 8192 check agreement against the
/// exact windowed summation instead and skip the dense timing.
std::vector<BenchRow> bench_fast_paths(const std::vector<int>& sizes, std::uint64_t seed);

std::string bench_to_json_string(const std::vector<BenchRow>& rows);

}  // namespace hardyops

#endif  // HARDYOPS_BENCH_HPP
