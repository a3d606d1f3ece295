/*
 * Copyright 2026 The rdft Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Invariant sweep over (N, a). Cases run on a worker pool; the report lists
// checks in (N, a, check) order regardless of scheduling.

#ifndef RDFT_VERIFY_HPP
#define RDFT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rdft/json_io.hpp"

namespace rdft {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct VerifyOptions {
  int n_min = 2;
  int n_max = 32;
  int a = -1;                 // -1: every valid a
  std::uint64_t seed = kDefaultSeed;
  double tol_scale = 1.0;
  bool inject_fault = false;  // perturb J(0,1) and J(1,0) by 1e-3
  int threads = 0;            // 0: hardware concurrency
};

struct CheckResult {
  std::string name;
  std::string claim;
  int n;
  int a;
  double value;
  double tolerance;
  bool passed;
  bool asserted;              // false: reported only
  std::string detail;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;
  int failures = 0;

  bool passed() const { return failures == 0; }
};

VerifyReport run_verify(const VerifyOptions& options);

/// Checks for a single (N, a).
std::vector<CheckResult> verify_case(GridSize n, int a, const VerifyOptions& options);

Json verify_report_to_json(const VerifyReport& report);

}  // namespace rdft

#endif  // RDFT_VERIFY_HPP
