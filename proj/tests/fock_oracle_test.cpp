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
#include <vector>

#include <gtest/gtest.h>

#include "photstat/circuits.hpp"
#include "photstat/coincidence.hpp"
#include "photstat/errors.hpp"
#include "photstat/fock_oracle.hpp"
#include "photstat/permanent.hpp"
#include "test_support.hpp"

namespace photstat::oracle {
namespace {

using std::numbers::pi;
using testing::Close;

std::vector<PortMode> single_label(std::vector<int> photons) {
  std::vector<PortMode> out;
  for (int n : photons) out.push_back({n, {Complex(1.0)}});
  return out;
}

TEST(Evolve, DftThreeOnOnePhotonPerPort) {
  const Circuit c = dft(3);
  const FockState out = evolve(c, single_label({1, 1, 1}));
  const int ones[] = {1, 1, 1};
  const Complex amp = out.amplitude(out.occupation(ones));
  EXPECT_TRUE(Close(std::norm(amp), 1.0 / 3, 1e-12));
  EXPECT_LT(std::abs(amp - permanent(c.unitary())), 1e-12);
  EXPECT_TRUE(Close(out.norm_squared(), 1.0, 1e-10));
}

TEST(Evolve, IdentityLeavesStateUnchanged) {
  const Circuit c = custom(ComplexMatrix::identity(3));
  const FockState out = evolve(c, single_label({2, 0, 1}));
  const int occ[] = {2, 0, 1};
  EXPECT_TRUE(Close(std::norm(out.amplitude(out.occupation(occ))), 1.0, 1e-15));
  EXPECT_EQ(out.amplitudes().size(), 1u);
}

TEST(Evolve, HongOuMandelDip) {
  const FockState out = evolve(beamsplitter(0.5), single_label({1, 1}));
  const int occ[] = {1, 1};
  EXPECT_LT(std::abs(out.amplitude(out.occupation(occ))), 1e-15);
  EXPECT_TRUE(Close(out.norm_squared(), 1.0, 1e-10));
}

TEST(Evolve, ConservesPhotonsAndNorm) {
  for (const Circuit &c : {dft(2), dft(3), dft(4), symmetric(0.7), beamsplitter(0.3)}) {
    std::vector<int> photons(static_cast<std::size_t>(c.ports()), 1);
    photons[0] = 2;
    const FockState out = evolve(c, single_label(photons));
    EXPECT_TRUE(Close(out.norm_squared(), 1.0, 1e-10));
    for (const auto &[occ, amp] : out.amplitudes()) {
      int total = 0;
      for (int v : occ) total += v;
      EXPECT_EQ(total, c.ports() + 1);
    }
  }
}

TEST(Evolve, CapacityAndValidation) {
  EXPECT_THROW(evolve(dft(3), single_label({3, 2, 2})), CapacityError);
  EXPECT_THROW(evolve(dft(5), single_label({1, 1, 1, 1, 1})), CapacityError);
  EXPECT_THROW(evolve(dft(3), single_label({1, 1})), DimensionError);
  std::vector<PortMode> bad{{1, {Complex(0.5)}}, {1, {Complex(1.0)}}};
  EXPECT_THROW(evolve(dft(2), bad), DomainError);
}

TEST(OracleCoincidence, DftSinglePhotons) {
  const Circuit c = dft(3);
  EXPECT_TRUE(Close(oracle_coincidence(c, make_inputs(fock_mixture(1), same_label(3))).p_normalized(),
                    1.0 / 3, 1e-12));
  EXPECT_TRUE(Close(oracle_coincidence(c, make_inputs(fock_mixture(1), distinct_labels(3))).p_normalized(),
                    2.0 / 9, 1e-12));
}

TEST(OracleCoincidence, Vac12MixtureMatchesEngine) {
  const auto inputs = make_inputs(vac12_mixture(0.3, 0.7), same_label(3));
  const OracleResult o = oracle_coincidence(dft(3), inputs);
  const auto ens = InputEnsemble::symmetric(vac12_mixture_stats(0.3, 0.7), 3);
  const CoincidenceResult e = coincidence_id_general(dft(3), ens);
  EXPECT_TRUE(Close(o.p_raw, e.p_raw, 1e-10));
  EXPECT_TRUE(Close(o.intensity_product, e.intensity_product, 1e-12));
}

TEST(OracleCoincidence, EquivalenceMatrix) {
  std::vector<Circuit> circuits{dft(2), dft(3), beamsplitter(0.3)};
  for (int k = 0; k < 8; ++k) circuits.push_back(symmetric(pi * (0.1 + k) / 4));
  struct Source {
    SourceStats stats;
    std::vector<MixtureComponent> mixture;
  };
  std::vector<Source> sources{{fock_stats(1), fock_mixture(1)}, {fock_stats(2), fock_mixture(2)}};
  for (double p : {0.0, 0.4, 0.8}) {
    for (double q : {0.0, 0.3, 1.0}) sources.push_back({vac12_mixture_stats(p, q), vac12_mixture(p, q)});
  }
  int cases = 0;
  for (const auto &c : circuits) {
    for (const auto &s : sources) {
      const auto ens = InputEnsemble::symmetric(s.stats, c.ports());
      const double id = oracle_coincidence(c, make_inputs(s.mixture, same_label(c.ports()))).p_raw;
      const double dist = oracle_coincidence(c, make_inputs(s.mixture, distinct_labels(c.ports()))).p_raw;
      EXPECT_TRUE(Close(id, coincidence_id_general(c, ens).p_raw, 1e-10)) << c.describe();
      EXPECT_TRUE(Close(dist, coincidence_dist_general(c, ens).p_raw, 1e-10)) << c.describe();
      cases += 2;
    }
  }
  EXPECT_GE(cases, 200);
}

TEST(OracleCoincidence, MismatchAnchors) {
  const Circuit c = dft(3);
  for (double xi : {0.0, 1.0, 2.0}) {
    const auto in = make_inputs(fock_mixture(1), sequential_overlap_labels(xi));
    EXPECT_TRUE(Close(oracle_coincidence(c, in).p_normalized(), coincidence_mismatch_n3(0, 0, xi), 1e-10))
        << xi;
  }
}

TEST(OracleCoincidence, OverlapLabelsMatchPatterns) {
  // xi = 0: all distinct; xi = 1: ports 2 and 3 shared; xi = 2: all shared.
  const auto l0 = sequential_overlap_labels(0.0);
  const auto l1 = sequential_overlap_labels(1.0);
  const auto l2 = sequential_overlap_labels(2.0);
  auto overlap = [](const std::vector<Complex> &a, const std::vector<Complex> &b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return std::norm(s);
  };
  EXPECT_NEAR(overlap(l0[1], l0[2]), 0.0, 1e-15);
  EXPECT_NEAR(overlap(l1[1], l1[2]), 1.0, 1e-15);
  EXPECT_NEAR(overlap(l1[0], l1[1]), 0.0, 1e-15);
  EXPECT_NEAR(overlap(l2[0], l2[1]), 1.0, 1e-15);
  EXPECT_NEAR(overlap(l2[0], l2[2]), 1.0, 1e-15);
  const auto half = sequential_overlap_labels(1.5);
  EXPECT_NEAR(overlap(half[0], half[1]), 0.5, 1e-15);
  EXPECT_NEAR(overlap(half[1], half[2]), 1.0, 1e-15);
}

TEST(OracleCoincidence, Validation) {
  std::vector<PortInput> bad = make_inputs({{0.5, 1}, {0.4, 0}}, same_label(2));
  EXPECT_THROW(oracle_coincidence(dft(2), bad), DomainError);
  EXPECT_THROW(vac12_mixture(1.2, 0.0), DomainError);
  const auto vacuum = make_inputs({{1.0, 0}}, same_label(2));
  EXPECT_EQ(oracle_coincidence(dft(2), vacuum).p_raw, 0.0);
  EXPECT_THROW(oracle_coincidence(dft(2), vacuum).p_normalized(), DomainError);
}

}  // namespace
}  // namespace photstat::oracle
