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

#include "photstat/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "photstat/errors.hpp"

namespace photstat {

namespace {

void check_entries(std::span<const Complex> entries) {
  for (const auto &z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("ComplexMatrix: non-finite entry");
    }
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("ComplexMatrix: dimensions must be at least 1x1");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("ComplexMatrix: dimensions must be at least 1x1");
  }
  if (data_.size() != rows * cols) {
    throw DimensionError("ComplexMatrix: expected " + std::to_string(rows * cols) +
                         " entries, got " + std::to_string(data_.size()));
  }
  check_entries(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("ComplexMatrix: dimensions must be at least 1x1");
  }
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_) {
      throw DimensionError("ComplexMatrix: ragged initializer");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  check_entries(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
  if (cols_ != rhs.rows_) {
    throw DimensionError("ComplexMatrix: incompatible shapes for product");
  }
  ComplexMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex a = (*this)(i, k);
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionError("ComplexMatrix: shape mismatch in comparison");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - rhs.data_[i]));
  }
  return worst;
}

ComplexMatrix mod_squared(const ComplexMatrix &u) {
  ComplexMatrix v(u.rows(), u.cols());
  for (std::size_t r = 0; r < u.rows(); ++r) {
    for (std::size_t c = 0; c < u.cols(); ++c) {
      v(r, c) = std::norm(u(r, c));
    }
  }
  return v;
}

ComplexMatrix column_select(const ComplexMatrix &u, std::span<const int> modes) {
  if (modes.size() != u.rows()) {
    throw DimensionError("column_select: tuple length " + std::to_string(modes.size()) +
                         " does not match row count " + std::to_string(u.rows()));
  }
  ComplexMatrix out(u.rows(), modes.size());
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const int col = modes[k];
    if (col < 0 || static_cast<std::size_t>(col) >= u.cols()) {
      throw DimensionError("column_select: column index " + std::to_string(col) +
                           " out of range");
    }
    for (std::size_t j = 0; j < u.rows(); ++j) {
      out(j, k) = u(j, static_cast<std::size_t>(col));
    }
  }
  return out;
}

UnitarityReport check_unitary(const ComplexMatrix &u, double tol) {
  if (!u.is_square()) {
    throw DimensionError("check_unitary: matrix is not square");
  }
  const double dev = (u.adjoint() * u).max_abs_diff(ComplexMatrix::identity(u.rows()));
  return {dev <= tol, dev};
}

}  // namespace photstat
