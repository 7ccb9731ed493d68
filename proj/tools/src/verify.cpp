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

#include "photstat/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "photstat/circuits.hpp"
#include "photstat/coincidence.hpp"
#include "photstat/fock_oracle.hpp"
#include "photstat/random.hpp"
#include "photstat/visibility.hpp"

namespace photstat::cli {

namespace {

constexpr double kOracleTolerance = 1e-10;
constexpr double kClosedFormTolerance = 1e-12;

/// Tracks the worst scaled discrepancy over a batch of comparisons.
class ErrorTally {
 public:
  explicit ErrorTally(double tol) : tol_(tol) {}

  void compare(double got, double want) {
    ++cases_;
    const double scale = std::max({1.0, std::abs(got), std::abs(want)});
    const double err = std::abs(got - want) / scale;
    worst_ = std::isnan(err) ? std::numeric_limits<double>::infinity() : std::max(worst_, err);
    if (!nearly_equal(got, want, tol_)) ++failures_;
  }

  CheckResult result(std::string name) const {
    std::ostringstream detail;
    detail << cases_ << " cases, max scaled error " << worst_ << " (tol " << tol_ << ")";
    if (failures_ > 0) detail << ", " << failures_ << " failed";
    return {std::move(name), failures_ == 0 && cases_ > 0, detail.str()};
  }

 private:
  double tol_;
  double worst_ = 0.0;
  int cases_ = 0;
  int failures_ = 0;
};

CheckResult check_permanent(std::mt19937_64 &rng, PermanentFn perm) {
  ErrorTally tally(kOracleTolerance);
  for (int trial = 0; trial < 64; ++trial) {
    const int n = 1 + trial % 8;
    const ComplexMatrix m = random_disk_matrix(n, rng);
    const Complex fast = perm(m);
    const Complex slow = permanent_naive(m);
    // Relative to |Per|, compared componentwise.
    const double scale = std::max(std::abs(slow), 1e-300);
    tally.compare(fast.real() / scale, slow.real() / scale);
    tally.compare(fast.imag() / scale, slow.imag() / scale);
  }
  return tally.result("permanent: Ryser vs explicit permutation sum");
}

std::vector<CheckResult> check_oracle(std::mt19937_64 &rng, PermanentFn perm) {
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  std::vector<Circuit> circuits{dft(2), dft(3), beamsplitter(0.3)};
  for (int k = 0; k < 8; ++k) {
    circuits.push_back(symmetric((k + jitter(rng)) * std::numbers::pi / 4.0));
  }

  struct Source {
    SourceStats stats;
    std::vector<oracle::MixtureComponent> mixture;
  };
  std::vector<Source> sources{{fock_stats(1), oracle::fock_mixture(1)},
                              {fock_stats(2), oracle::fock_mixture(2)}};
  for (double p : {0.0, 0.3, 0.6}) {
    for (double q : {0.0, 0.5, 1.0}) {
      sources.push_back({vac12_mixture_stats(p, q), oracle::vac12_mixture(p, q)});
    }
  }

  ErrorTally id_tally(kOracleTolerance);
  ErrorTally dist_tally(kOracleTolerance);
  for (const auto &c : circuits) {
    const InterferenceWeights w(c, perm);
    for (const auto &s : sources) {
      const auto ensemble = InputEnsemble::symmetric(s.stats, c.ports());
      const auto same = oracle::make_inputs(s.mixture, oracle::same_label(c.ports()));
      const auto distinct = oracle::make_inputs(s.mixture, oracle::distinct_labels(c.ports()));
      id_tally.compare(w.evaluate(ensemble, Distinguishability::kIndistinguishable).p_raw,
                       oracle::oracle_coincidence(c, same).p_raw);
      dist_tally.compare(w.evaluate(ensemble, Distinguishability::kDistinguishable).p_raw,
                         oracle::oracle_coincidence(c, distinct).p_raw);
    }
  }
  return {id_tally.result("oracle: indistinguishable engine vs Fock-space evolution"),
          dist_tally.result("oracle: distinguishable engine vs Fock-space evolution")};
}

CheckResult check_hom(std::mt19937_64 &rng, PermanentFn perm) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ErrorTally tally(kClosedFormTolerance);
  for (int k = 0; k < 100; ++k) {
    const double r = unit(rng);
    const double g2 = 4.0 * unit(rng);
    const double t = 1.0 - r;
    const InterferenceWeights w(beamsplitter(r), perm);
    const double g[] = {1.0, 1.0, g2};
    const double p_id = w.evaluate_symmetric(g, Distinguishability::kIndistinguishable);
    const double p_dist = w.evaluate_symmetric(g, Distinguishability::kDistinguishable);
    tally.compare(p_id, 1.0 - 2.0 * r * t * (2.0 - g2));
    tally.compare(p_dist, 1.0 - 2.0 * r * t * (1.0 - g2));
    tally.compare(visibility(p_id, p_dist).v, v2_closed(r, g2));
  }
  return tally.result("closed form: two-port coincidences and visibility");
}

CheckResult check_dft3(std::mt19937_64 &rng, PermanentFn perm) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const InterferenceWeights w(dft(3), perm);
  ErrorTally tally(kClosedFormTolerance);
  for (int k = 0; k < 100; ++k) {
    const double g2 = 5.0 * unit(rng);
    const double g3 = 20.0 * unit(rng);
    const double g[] = {1.0, 1.0, g2, g3};
    const double p_id = w.evaluate_symmetric(g, Distinguishability::kIndistinguishable);
    const double p_dist = w.evaluate_symmetric(g, Distinguishability::kDistinguishable);
    tally.compare(p_id, g3 / 9.0 + 1.0 / 3.0);
    tally.compare(p_dist, g3 / 9.0 + 2.0 / 3.0 * g2 + 2.0 / 9.0);
    tally.compare(visibility(p_id, p_dist).v, v3_dft(g2, g3));
  }
  return tally.result("closed form: three-port DFT coincidences and visibility");
}

CheckResult check_symmetric(std::mt19937_64 &rng, PermanentFn perm) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ErrorTally tally(kClosedFormTolerance);
  for (int k = 0; k < 50; ++k) {
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    const double g2 = 5.0 * unit(rng);
    const double g3 = 20.0 * unit(rng);
    const InterferenceWeights w(symmetric(phi), perm);
    const double g[] = {1.0, 1.0, g2, g3};
    for (auto d : {Distinguishability::kIndistinguishable, Distinguishability::kDistinguishable}) {
      tally.compare(w.evaluate_symmetric(g, d), coincidence_sym_phase(phi, g2, g3, d));
    }
  }
  return tally.result("closed form: symmetric(phi) coincidences");
}

CheckResult check_explicit(std::mt19937_64 &rng, PermanentFn perm) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ErrorTally tally(kClosedFormTolerance);
  for (int k = 0; k < 50; ++k) {
    const Circuit c = custom(random_unitary(3, rng), 1e-12);
    std::vector<SourceStats> ports;
    for (int i = 0; i < 3; ++i) {
      ports.push_back(SourceStats(0.5 + 2.0 * unit(rng), {3.0 * unit(rng), 10.0 * unit(rng)}));
    }
    const InputEnsemble inputs(std::move(ports));
    const InterferenceWeights w(c, perm);
    for (auto d : {Distinguishability::kIndistinguishable, Distinguishability::kDistinguishable}) {
      tally.compare(w.evaluate(inputs, d).p_raw, coincidence_n3_explicit(c, inputs, d).p_raw);
    }
  }
  return tally.result("engines: general permanent sum vs explicit three-port expansion");
}

CheckResult check_mismatch(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ErrorTally tally(kClosedFormTolerance);
  for (int k = 0; k < 50; ++k) {
    const double g2 = 5.0 * unit(rng);
    const double g3 = 20.0 * unit(rng);
    // Lower branch at M = 1 against upper branch at M = 0.
    const double lower = g3 / 9.0 + 4.0 * g2 / 9.0 + 1.0 / 9.0;
    tally.compare(coincidence_mismatch_n3(g2, g3, 1.0), lower);
    tally.compare(coincidence_mismatch_n3(g2, g3, std::nextafter(1.0, 2.0)), lower);
    tally.compare(coincidence_mismatch_n3(g2, g3, 0.0), g3 / 9.0 + 2.0 / 3.0 * g2 + 2.0 / 9.0);
    tally.compare(coincidence_mismatch_n3(g2, g3, 2.0), g3 / 9.0 + 1.0 / 3.0);
  }
  return tally.result("mode mismatch: branch continuity and endpoints");
}

CheckResult check_mismatch_oracle() {
  ErrorTally tally(kOracleTolerance);
  const Circuit c = dft(3);
  for (double xi : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0}) {
    const auto inputs = oracle::make_inputs(oracle::fock_mixture(1), oracle::sequential_overlap_labels(xi));
    tally.compare(oracle::oracle_coincidence(c, inputs).p_normalized(),
                  coincidence_mismatch_n3(0.0, 0.0, xi));
  }
  return tally.result("mode mismatch: single-photon oracle along the overlap path");
}

}  // namespace

bool nearly_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.pass; });
}

VerifyReport run_verification(std::uint64_t seed, PermanentFn perm) {
  std::mt19937_64 rng(seed);
  VerifyReport report;
  // A throwing check counts as a failure; the remaining checks still run.
  auto guarded = [&](const std::string &name, auto &&check) {
    try {
      check();
    } catch (const std::exception &e) {
      report.checks.push_back({name, false, std::string("threw: ") + e.what()});
    }
  };
  guarded("permanent: Ryser vs explicit permutation sum", [&] { report.checks.push_back(check_permanent(rng, perm)); });
  guarded("oracle: engines vs Fock-space evolution", [&] {
    for (auto &c : check_oracle(rng, perm)) report.checks.push_back(std::move(c));
  });
  guarded("closed form: two-port coincidences and visibility", [&] { report.checks.push_back(check_hom(rng, perm)); });
  guarded("closed form: three-port DFT coincidences and visibility", [&] { report.checks.push_back(check_dft3(rng, perm)); });
  guarded("closed form: symmetric(phi) coincidences", [&] { report.checks.push_back(check_symmetric(rng, perm)); });
  guarded("engines: general permanent sum vs explicit three-port expansion", [&] { report.checks.push_back(check_explicit(rng, perm)); });
  guarded("mode mismatch: branch continuity and endpoints", [&] { report.checks.push_back(check_mismatch(rng)); });
  guarded("mode mismatch: single-photon oracle along the overlap path", [&] { report.checks.push_back(check_mismatch_oracle()); });
  return report;
}

}  // namespace photstat::cli
