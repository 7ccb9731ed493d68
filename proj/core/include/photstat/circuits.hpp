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

#include <string>
#include <variant>

#include "photstat/complex_matrix.hpp"

namespace photstat {

struct DftKind {
  int ports;
  bool operator==(const DftKind &) const = default;
};
struct SymmetricKind {
  double phi;  // radians, wrapped to [0, 2pi)
  bool operator==(const SymmetricKind &) const = default;
};
struct BeamsplitterKind {
  double reflectance;
  bool operator==(const BeamsplitterKind &) const = default;
};
struct CustomKind {
  bool operator==(const CustomKind &) const = default;
};

using CircuitKind = std::variant<DftKind, SymmetricKind, BeamsplitterKind, CustomKind>;

/// A lossless linear-optical network: an N x N unitary together with how it
/// was built. Output mode i receives sum_k u(i, k) a_k^dagger.
class Circuit {
 public:
  const ComplexMatrix &unitary() const noexcept { return u_; }
  const CircuitKind &kind() const noexcept { return kind_; }
  int ports() const noexcept { return static_cast<int>(u_.rows()); }
  std::string describe() const;

  friend Circuit dft(int ports);
  friend Circuit symmetric(double phi);
  friend Circuit beamsplitter(double reflectance);
  friend Circuit custom(ComplexMatrix u, double tol);

 private:
  Circuit(ComplexMatrix u, CircuitKind kind) : u_(std::move(u)), kind_(kind) {}

  ComplexMatrix u_;
  CircuitKind kind_;
};

/// Tolerance applied to user-supplied unitaries.
inline constexpr double kCustomUnitarityTolerance = 1e-9;

/// u_jk = exp(2 pi i j k / N) / sqrt(N) with 0-based j, k. Requires N >= 2.
Circuit dft(int ports);

/// 3x3 matrix with alpha = (2 + e^{i phi})/3 on the diagonal and
/// beta = (-1 + e^{i phi})/3 elsewhere. Identity at phi = 0,
/// DFT-equivalent at phi = 2pi/3 and 4pi/3.
Circuit symmetric(double phi);

/// [[sqrt(T), i sqrt(R)], [i sqrt(R), sqrt(T)]] with T = 1 - R.
Circuit beamsplitter(double reflectance);

/// Wraps a user matrix. Throws UnitarityError if max|U^dagger U - I| > tol.
Circuit custom(ComplexMatrix u, double tol = kCustomUnitarityTolerance);

/// Wraps phi into [0, 2pi).
double wrap_phase(double phi);

}  // namespace photstat
