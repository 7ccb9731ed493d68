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

#include <cstddef>

#include "photstat/complex_matrix.hpp"

namespace photstat {

/// Largest order accepted by permanent().
inline constexpr std::size_t kMaxPermanentOrder = 24;
/// Largest order accepted by permanent_naive().
inline constexpr std::size_t kMaxNaivePermanentOrder = 9;

/// Exact permanent via Ryser's inclusion-exclusion formula with Gray-code
/// subset iteration, O(2^n n). Throws DimensionError for non-square input and
/// CapacityError above kMaxPermanentOrder.
Complex permanent(const ComplexMatrix &m);

/// Explicit sum over all n! permutations. Reference implementation used to
/// check permanent(); limited to kMaxNaivePermanentOrder.
Complex permanent_naive(const ComplexMatrix &m);

/// Signature for swapping the permanent used by the coincidence engines.
using PermanentFn = Complex (*)(const ComplexMatrix &);

}  // namespace photstat
