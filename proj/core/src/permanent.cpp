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

#include "photstat/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "photstat/errors.hpp"

namespace photstat {

namespace {

void require_square(const ComplexMatrix &m, std::size_t limit, const char *who) {
  if (!m.is_square()) {
    throw DimensionError(std::string(who) + ": matrix is not square");
  }
  if (m.rows() > limit) {
    throw CapacityError(std::string(who) + ": order " + std::to_string(m.rows()) +
                        " exceeds limit " + std::to_string(limit));
  }
}

}  // namespace

Complex permanent(const ComplexMatrix &m) {
  require_square(m, kMaxPermanentOrder, "permanent");
  const std::size_t n = m.rows();

  // Row sums over the current column subset S. Gray code order changes S by
  // exactly one column per step.
  std::vector<Complex> row_sums(n, Complex{0.0, 0.0});
  Complex total{0.0, 0.0};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const auto col = static_cast<std::size_t>(std::countr_zero(k));
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    if (gray & bit) {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] += m(i, col);
    } else {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] -= m(i, col);
    }
    Complex prod = row_sums[0];
    for (std::size_t i = 1; i < n; ++i) prod *= row_sums[i];
    // (-1)^(n - |S|)
    if (((n - static_cast<std::size_t>(std::popcount(gray))) & 1U) != 0) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return total;
}

Complex permanent_naive(const ComplexMatrix &m) {
  require_square(m, kMaxNaivePermanentOrder, "permanent_naive");
  const std::size_t n = m.rows();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  Complex total{0.0, 0.0};
  do {
    Complex prod{1.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) prod *= m(i, sigma[i]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace photstat
