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

#include "photstat/random.hpp"

#include <cmath>
#include <numbers>

#include "photstat/errors.hpp"

namespace photstat {

ComplexMatrix random_disk_matrix(int n, std::mt19937_64 &rng) {
  if (n < 1) throw DimensionError("random_disk_matrix: n must be positive");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto size = static_cast<std::size_t>(n);
  ComplexMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const double r = std::sqrt(unit(rng));
      const double theta = 2.0 * std::numbers::pi * unit(rng);
      m(i, j) = std::polar(r, theta);
    }
  }
  return m;
}

ComplexMatrix random_unitary(int n, std::mt19937_64 &rng) {
  if (n < 1) throw DimensionError("random_unitary: n must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto size = static_cast<std::size_t>(n);
  ComplexMatrix q(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      q(i, j) = Complex{re, im};
    }
  }
  // Modified Gram-Schmidt over columns.
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex dot{};
      for (std::size_t i = 0; i < size; ++i) dot += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < size; ++i) q(i, j) -= dot * q(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < size; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < size; ++i) q(i, j) /= norm;
  }
  return q;
}

}  // namespace photstat
