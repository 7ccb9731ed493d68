// Copyright 2026 The photstat Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "photstat/permanent.hpp"

namespace photstat::cli {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Cross-checks engines against the Fock oracle, closed forms and each
/// other. `perm` replaces the permanent used by the engines and by the
/// Ryser-vs-naive check, so a broken implementation can be fed in to make
/// sure the suite notices. Deterministic for a given seed.
VerifyReport run_verification(std::uint64_t seed, PermanentFn perm = permanent);

/// |a - b| <= tol * max(1, |a|, |b|). Probabilities here are O(1), and some
/// exact values are zero, so the scale floor keeps zero cases meaningful.
bool nearly_equal(double a, double b, double tol);

}  // namespace photstat::cli
