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

#include <stdexcept>
#include <string>

namespace photstat {

/// Shape mismatch: non-square input, wrong port count, bad tuple length.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input exceeds a hard computational limit (permanent size, oracle photons).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Parameter outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Circuit fails the unitarity test. Carries the observed deviation.
class UnitarityError : public std::invalid_argument {
 public:
  UnitarityError(const std::string &what, double max_deviation)
      : std::invalid_argument(what), max_deviation_(max_deviation) {}

  double max_deviation() const noexcept { return max_deviation_; }

 private:
  double max_deviation_;
};

}  // namespace photstat
