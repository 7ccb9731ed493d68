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

#include "photstat/coincidence.hpp"

#include <cmath>
#include <string>

#include "photstat/errors.hpp"

namespace photstat {

namespace {

constexpr double kOverlapTolerance = 1e-12;

void compositions(int remaining, std::size_t slot, std::vector<int> &current,
                  std::vector<ExponentTuple> &out) {
  if (slot + 1 == current.size()) {
    current[slot] = remaining;
    out.push_back(ExponentTuple{current});
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    current[slot] = v;
    compositions(remaining - v, slot + 1, current, out);
  }
}

void require_orders(const InputEnsemble &inputs, int n) {
  for (int i = 0; i < inputs.ports(); ++i) {
    if (inputs.port(i).max_order() < n) {
      throw DomainError("port " + std::to_string(i) + " statistics are defined up to order " +
                        std::to_string(inputs.port(i).max_order()) + "; g(" +
                        std::to_string(n) + ") is required");
    }
  }
}

}  // namespace

std::vector<int> ExponentTuple::mode_assignment() const {
  std::vector<int> d;
  for (std::size_t j = 0; j < s.size(); ++j) {
    d.insert(d.end(), static_cast<std::size_t>(s[j]), static_cast<int>(j));
  }
  return d;
}

double ExponentTuple::factorial_product() const {
  double prod = 1.0;
  for (int k : s) {
    for (int f = 2; f <= k; ++f) prod *= f;
  }
  return prod;
}

std::vector<ExponentTuple> enumerate_exponent_tuples(int n) {
  if (n < 1 || n > kMaxEnginePorts) {
    throw DomainError("enumerate_exponent_tuples: N must be in [1, " +
                      std::to_string(kMaxEnginePorts) + "]");
  }
  std::vector<ExponentTuple> out;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  compositions(n, 0, current, out);
  return out;
}

InputEnsemble::InputEnsemble(std::vector<SourceStats> ports) : ports_(std::move(ports)) {
  if (ports_.empty()) {
    throw DimensionError("InputEnsemble: need at least one port");
  }
}

InputEnsemble InputEnsemble::symmetric(const SourceStats &stats, int ports) {
  if (ports < 1) {
    throw DimensionError("InputEnsemble: need at least one port");
  }
  return InputEnsemble(std::vector<SourceStats>(static_cast<std::size_t>(ports), stats));
}

double InputEnsemble::intensity_product() const {
  double prod = 1.0;
  for (const auto &p : ports_) prod *= p.mean_n();
  return prod;
}

double CoincidenceResult::p_normalized() const {
  if (intensity_product <= 0.0) {
    throw DomainError("p_normalized: an input port has zero mean photon number");
  }
  return p_raw / intensity_product;
}

InterferenceWeights::InterferenceWeights(const Circuit &circuit, PermanentFn perm)
    : ports_(circuit.ports()), tuples_(enumerate_exponent_tuples(circuit.ports())) {
  const ComplexMatrix &u = circuit.unitary();
  const ComplexMatrix v = mod_squared(u);
  id_weights_.reserve(tuples_.size());
  dist_weights_.reserve(tuples_.size());
  for (const auto &t : tuples_) {
    const std::vector<int> d = t.mode_assignment();
    const double fact = t.factorial_product();
    id_weights_.push_back(std::norm(perm(column_select(u, d)) / fact));
    dist_weights_.push_back(perm(column_select(v, d)).real() / fact);
  }
}

CoincidenceResult InterferenceWeights::evaluate(const InputEnsemble &inputs,
                                                Distinguishability d) const {
  if (inputs.ports() != ports_) {
    throw DimensionError("coincidence: circuit has " + std::to_string(ports_) +
                         " ports but ensemble has " + std::to_string(inputs.ports()));
  }
  require_orders(inputs, ports_);
  const auto w = weights(d);
  double total = 0.0;
  for (std::size_t k = 0; k < tuples_.size(); ++k) {
    double term = w[k];
    for (int i = 0; i < ports_; ++i) {
      term *= inputs.port(i).factorial_moment(tuples_[k].s[static_cast<std::size_t>(i)]);
    }
    total += term;
  }
  return {total, inputs.intensity_product()};
}

double InterferenceWeights::evaluate_symmetric(std::span<const double> g,
                                               Distinguishability d) const {
  if (g.size() < static_cast<std::size_t>(ports_) + 1) {
    throw DomainError("coincidence: g sequence must reach order " + std::to_string(ports_));
  }
  const auto w = weights(d);
  double total = 0.0;
  for (std::size_t k = 0; k < tuples_.size(); ++k) {
    double term = w[k];
    for (int s : tuples_[k].s) term *= g[static_cast<std::size_t>(s)];
    total += term;
  }
  return total;
}

CoincidenceResult coincidence_id_general(const Circuit &circuit, const InputEnsemble &inputs,
                                         PermanentFn perm) {
  return InterferenceWeights(circuit, perm).evaluate(inputs, Distinguishability::kIndistinguishable);
}

CoincidenceResult coincidence_dist_general(const Circuit &circuit, const InputEnsemble &inputs,
                                           PermanentFn perm) {
  return InterferenceWeights(circuit, perm).evaluate(inputs, Distinguishability::kDistinguishable);
}

CoincidenceResult coincidence_n3_explicit(const Circuit &circuit, const InputEnsemble &inputs,
                                          Distinguishability d) {
  if (circuit.ports() != 3 || inputs.ports() != 3) {
    throw DimensionError("coincidence_n3_explicit: requires a 3-port circuit and 3 inputs");
  }
  require_orders(inputs, 3);
  const ComplexMatrix &m = circuit.unitary();
  const bool id = d == Distinguishability::kIndistinguishable;
  // 1-based element access; in the distinguishable case amplitudes are
  // replaced by |u_ij|^2 and sums are not squared.
  auto u = [&](int i, int j) -> Complex {
    const Complex z = m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    return id ? z : Complex{std::norm(z), 0.0};
  };
  auto weight = [&](Complex amplitude) { return id ? std::norm(amplitude) : amplitude.real(); };
  auto mom = [&](int port, int order) { return inputs.port(port - 1).factorial_moment(order); };
  auto n = [&](int port) { return inputs.port(port - 1).mean_n(); };

  double p = 0.0;
  // All three photons from one port.
  p += weight(u(1, 1) * u(2, 1) * u(3, 1)) * mom(1, 3);
  p += weight(u(1, 2) * u(2, 2) * u(3, 2)) * mom(2, 3);
  p += weight(u(1, 3) * u(2, 3) * u(3, 3)) * mom(3, 3);
  // Two photons from one port, one from another.
  p += weight(u(1, 1) * u(2, 1) * u(3, 2) + u(1, 1) * u(2, 2) * u(3, 1) +
              u(1, 2) * u(2, 1) * u(3, 1)) *
       mom(1, 2) * n(2);
  p += weight(u(1, 1) * u(2, 1) * u(3, 3) + u(1, 1) * u(2, 3) * u(3, 1) +
              u(1, 3) * u(2, 1) * u(3, 1)) *
       mom(1, 2) * n(3);
  p += weight(u(1, 2) * u(2, 2) * u(3, 1) + u(1, 2) * u(2, 1) * u(3, 2) +
              u(1, 1) * u(2, 2) * u(3, 2)) *
       n(1) * mom(2, 2);
  p += weight(u(1, 2) * u(2, 2) * u(3, 3) + u(1, 2) * u(2, 3) * u(3, 2) +
              u(1, 3) * u(2, 2) * u(3, 2)) *
       mom(2, 2) * n(3);
  p += weight(u(1, 3) * u(2, 3) * u(3, 1) + u(1, 3) * u(2, 1) * u(3, 3) +
              u(1, 1) * u(2, 3) * u(3, 3)) *
       n(1) * mom(3, 2);
  p += weight(u(1, 3) * u(2, 3) * u(3, 2) + u(1, 3) * u(2, 2) * u(3, 3) +
              u(1, 2) * u(2, 3) * u(3, 3)) *
       n(2) * mom(3, 2);
  // One photon per port: the full 3x3 permanent, written out.
  const Complex per = u(1, 1) * u(2, 2) * u(3, 3) + u(1, 1) * u(2, 3) * u(3, 2) +
                      u(1, 2) * u(2, 1) * u(3, 3) + u(1, 2) * u(2, 3) * u(3, 1) +
                      u(1, 3) * u(2, 1) * u(3, 2) + u(1, 3) * u(2, 2) * u(3, 1);
  p += weight(per) * n(1) * n(2) * n(3);
  return {p, inputs.intensity_product()};
}

OverlapConfig OverlapConfig::from_xi(double xi) {
  if (!(xi >= 0.0 && xi <= 2.0)) {
    throw DomainError("overlap parameter xi must lie in [0, 2]");
  }
  if (xi <= 1.0) {
    return {xi, 0.0, xi, 0.0};
  }
  return {xi, xi - 1.0, 1.0, xi - 1.0};
}

OverlapConfig OverlapConfig::from_overlaps(double m12, double m23, double m31) {
  auto in_unit = [](double m) { return m >= 0.0 && m <= 1.0; };
  if (!in_unit(m12) || !in_unit(m23) || !in_unit(m31)) {
    throw DomainError("mode overlaps must lie in [0, 1]");
  }
  if (std::abs(m12) <= kOverlapTolerance && std::abs(m31) <= kOverlapTolerance) {
    return {m23, 0.0, m23, 0.0};
  }
  if (std::abs(m23 - 1.0) <= kOverlapTolerance && std::abs(m12 - m31) <= kOverlapTolerance) {
    return {1.0 + m12, m12, 1.0, m31};
  }
  throw DomainError("mode overlaps are off the sequential alignment path; only (0, M, 0) and "
                    "(M, 1, M) are supported");
}

double coincidence_mismatch_n3(double g2, double g3, double xi) {
  const OverlapConfig c = OverlapConfig::from_xi(xi);
  if (xi <= 1.0) {
    const double m = c.m23;
    return g3 / 9.0 + 2.0 * (3.0 - m) / 9.0 * g2 + (2.0 - m) / 9.0;
  }
  const double m = c.m12;
  return g3 / 9.0 + 4.0 * (1.0 - m) / 9.0 * g2 + (1.0 + 2.0 * m) / 9.0;
}

double coincidence_sym_phase(double phi, double g2, double g3, Distinguishability d) {
  const Complex e = std::polar(1.0, phi);
  const Complex alpha = (2.0 + e) / 3.0;
  const Complex beta = (-1.0 + e) / 3.0;
  const double a2 = std::norm(alpha);
  const double b2 = std::norm(beta);
  const double triple = 3.0 * a2 * b2 * b2 * g3;
  if (d == Distinguishability::kIndistinguishable) {
    return triple + 6.0 * b2 * std::norm(alpha * alpha + alpha * beta + beta * beta) * g2 +
           std::norm(alpha * alpha * alpha + 3.0 * alpha * beta * beta + 2.0 * beta * beta * beta);
  }
  return triple + 6.0 * b2 * (a2 * a2 + a2 * b2 + b2 * b2) * g2 + a2 * a2 * a2 +
         3.0 * a2 * b2 * b2 + 2.0 * b2 * b2 * b2;
}

}  // namespace photstat
