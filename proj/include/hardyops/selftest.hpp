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

#ifndef HARDYOPS_SELFTEST_HPP
#define HARDYOPS_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hardyops {

struct SelftestGroup {
  std::string name;
  bool pass = false;
  double worst = 0.0;   // worst residual seen in the group
  std::string detail;   // empty unless something failed
};

struct SelftestReport {
  std::uint64_t seed = 0;
  bool all_pass = false;
  std::vector<SelftestGroup> groups;
};

/// Runs the seeded invariant suite of every module. inject_fault perturbs
/// the Toeplitz+Hankel fixture by 1e-3 so the tph group (and only that
/// group) must fail; it exists to prove the suite has teeth.
SelftestReport selftest(std::uint64_t seed, bool inject_fault = false);

std::string selftest_report_to_json_string(const SelftestReport& r);

}  // namespace hardyops

#endif  // HARDYOPS_SELFTEST_HPP
