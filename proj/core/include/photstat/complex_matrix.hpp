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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace photstat {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Always at least 1x1 with finite entries.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix &rhs) const;

  /// Largest entrywise modulus of (this - rhs). Shapes must match.
  double max_abs_diff(const ComplexMatrix &rhs) const;

  bool operator==(const ComplexMatrix &) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

/// Entrywise |u_ij|^2, stored with zero imaginary parts.
ComplexMatrix mod_squared(const ComplexMatrix &u);

/// Builds the N x N matrix whose k-th column is column `modes[k]` of `u`.
/// Indices are 0-based and may repeat. Requires modes.size() == u.rows().
ComplexMatrix column_select(const ComplexMatrix &u, std::span<const int> modes);

struct UnitarityReport {
  bool pass;
  double max_deviation;  // max |(U^dagger U - I)_ij|
};

inline constexpr double kUnitarityTolerance = 1e-12;

UnitarityReport check_unitary(const ComplexMatrix &u, double tol = kUnitarityTolerance);

}  // namespace photstat
