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

#include <random>

#include "photstat/complex_matrix.hpp"

namespace photstat {

/// n x n matrix with entries drawn uniformly from the closed unit disk.
ComplexMatrix random_disk_matrix(int n, std::mt19937_64 &rng);

/// Haar-distributed unitary: the Q factor of a Gram-Schmidt QR of a complex
/// Gaussian matrix, with R taken to have a positive real diagonal.
ComplexMatrix random_unitary(int n, std::mt19937_64 &rng);

}  // namespace photstat
