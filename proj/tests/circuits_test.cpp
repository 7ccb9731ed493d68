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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "photstat/circuits.hpp"
#include "photstat/coincidence.hpp"
#include "photstat/errors.hpp"
#include "photstat/random.hpp"
#include "test_support.hpp"

namespace photstat {
namespace {

using std::numbers::pi;
using testing::Close;

TEST(Dft, ThreePortMatrix) {
  const ComplexMatrix u = dft(3).unitary();
  const Complex w = std::polar(1.0, 2.0 * pi / 3.0);
  const double s = 1.0 / std::sqrt(3.0);
  const Complex expected[3][3] = {{1.0, 1.0, 1.0}, {1.0, w, w * w}, {1.0, w * w, w}};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_LT(std::abs(u(r, c) - s * expected[r][c]), 1e-15) << r << "," << c;
    }
  }
}

TEST(Dft, BalancedAndOrthogonal) {
  const ComplexMatrix balanced = mod_squared(dft(2).unitary());
  for (auto x : balanced.data()) EXPECT_TRUE(Close(x.real(), 0.5, 1e-15));
  const ComplexMatrix u = dft(4).unitary();
  Complex dot = 0.0;
  for (std::size_t c = 0; c < 4; ++c) dot += u(1, c) * std::conj(u(3, c));
  EXPECT_LT(std::abs(dot), 1e-15);
  for (int n = 2; n <= 8; ++n) EXPECT_TRUE(check_unitary(dft(n).unitary(), 1e-12).pass) << n;
  EXPECT_THROW(dft(1), DomainError);
}

TEST(Symmetric, PhaseExamples) {
  EXPECT_LT(symmetric(0.0).unitary().max_abs_diff(ComplexMatrix::identity(3)), 1e-15);
  const ComplexMatrix b = symmetric(2.0 * pi / 3.0).unitary();
  for (auto x : b.data()) EXPECT_TRUE(Close(std::abs(x), 1.0 / std::sqrt(3.0), 1e-15));
  const ComplexMatrix h = symmetric(pi).unitary();
  EXPECT_LT(std::abs(h(0, 0) - 1.0 / 3.0), 1e-15);
  EXPECT_LT(std::abs(h(0, 1) + 2.0 / 3.0), 1e-15);
}

TEST(Symmetric, RowSumIsPhaseFactor) {
  for (double phi : {0.3, 1.0, 2.5, 4.0, 6.0}) {
    const ComplexMatrix u = symmetric(phi).unitary();
    for (std::size_t r = 0; r < 3; ++r) {
      const Complex sum = u(r, 0) + u(r, 1) + u(r, 2);
      EXPECT_LT(std::abs(sum - std::polar(1.0, phi)), 1e-15);
    }
    EXPECT_TRUE(check_unitary(u, 1e-12).pass);
  }
}

TEST(Symmetric, PhaseWrapping) {
  EXPECT_TRUE(Close(wrap_phase(2.0 * pi + 0.5), 0.5, 1e-15));
  EXPECT_TRUE(Close(wrap_phase(-0.5), 2.0 * pi - 0.5, 1e-15));
  const auto kind = std::get<SymmetricKind>(symmetric(-pi / 2).kind());
  EXPECT_TRUE(Close(kind.phi, 1.5 * pi, 1e-15));
}

TEST(Symmetric, MatchesDftObservablesAtTwoPiOverThree) {
  const InterferenceWeights a(symmetric(2.0 * pi / 3.0));
  const InterferenceWeights b(dft(3));
  for (const SourceStats &s : {fock_stats(1), fock_stats(2), laser_stats(), thermal_stats(),
                               custom_stats(1.7, 0.4), vac12_mixture_stats(0.3, 0.7)}) {
    const auto inputs = InputEnsemble::symmetric(s, 3);
    for (auto d : {Distinguishability::kIndistinguishable, Distinguishability::kDistinguishable}) {
      EXPECT_TRUE(Close(a.evaluate(inputs, d).p_raw, b.evaluate(inputs, d).p_raw, 1e-12));
    }
  }
}

TEST(Beamsplitter, Examples) {
  const ComplexMatrix balanced = mod_squared(beamsplitter(0.5).unitary());
  for (auto x : balanced.data()) {
    EXPECT_TRUE(Close(x.real(), 0.5, 1e-15));
  }
  EXPECT_EQ(mod_squared(beamsplitter(0.0).unitary()), ComplexMatrix::identity(2));
  const ComplexMatrix v = mod_squared(beamsplitter(0.3).unitary());
  EXPECT_TRUE(Close(v(0, 0).real(), 0.7, 1e-15));
  EXPECT_TRUE(Close(v(0, 1).real(), 0.3, 1e-15));
  EXPECT_THROW(beamsplitter(-0.1), DomainError);
  EXPECT_THROW(beamsplitter(1.1), DomainError);
}

TEST(Beamsplitter, TwoRtNeverExceedsHalf) {
  for (int k = 0; k <= 100; ++k) {
    const double r = k / 100.0;
    EXPECT_LE(2.0 * r * (1.0 - r), 0.5 + 1e-15);
    EXPECT_TRUE(check_unitary(beamsplitter(r).unitary(), 1e-12).pass);
  }
}

TEST(Custom, AcceptsPastedDft) {
  const ComplexMatrix ref = dft(3).unitary();
  ComplexMatrix pasted(3, 3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      // Ten significant digits, as if copied from a printout.
      pasted(r, c) = Complex(std::round(ref(r, c).real() * 1e10) / 1e10,
                             std::round(ref(r, c).imag() * 1e10) / 1e10);
    }
  }
  const Circuit c = custom(pasted);
  EXPECT_TRUE(std::holds_alternative<CustomKind>(c.kind()));
}

TEST(Custom, RejectsNonUnitaryWithDeviation) {
  ComplexMatrix m = ComplexMatrix::identity(3);
  m(1, 1) = 0.0;
  try {
    custom(m);
    FAIL() << "expected UnitarityError";
  } catch (const UnitarityError &e) {
    EXPECT_TRUE(Close(e.max_deviation(), 1.0, 1e-15));
  }
  EXPECT_THROW(custom(ComplexMatrix(2, 3)), DimensionError);
}

TEST(Custom, AcceptsSeededHaarLikeMatrix) {
  std::mt19937_64 rng(99);
  const ComplexMatrix u = random_unitary(3, rng);
  EXPECT_LT((u.adjoint() * u).max_abs_diff(ComplexMatrix::identity(3)), 1e-12);
  EXPECT_NO_THROW(custom(u));
}

TEST(Circuit, Describe) {
  EXPECT_EQ(dft(3).describe(), "dft(3)");
  EXPECT_EQ(beamsplitter(0.5).describe(), "beamsplitter(R=0.5)");
  EXPECT_EQ(symmetric(0.3).describe(), "symmetric(phi=0.3)");
}

}  // namespace
}  // namespace photstat
