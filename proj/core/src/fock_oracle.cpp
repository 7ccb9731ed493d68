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

#include "photstat/fock_oracle.hpp"

#include <cmath>
#include <string>

#include "photstat/coincidence.hpp"
#include "photstat/errors.hpp"

namespace photstat::oracle {

namespace {

constexpr double kNormTolerance = 1e-12;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

using Polynomial = std::map<std::vector<int>, Complex>;

struct LinearTerm {
  std::size_t mode;
  Complex coeff;
};

Polynomial multiply(const Polynomial &poly, const std::vector<LinearTerm> &form) {
  Polynomial out;
  for (const auto &[occ, c] : poly) {
    for (const auto &t : form) {
      std::vector<int> next = occ;
      ++next[t.mode];
      out[next] += c * t.coeff;
    }
  }
  return out;
}

void validate_labels(std::span<const Complex> amps, std::size_t labels) {
  if (amps.size() != labels) {
    throw DimensionError("oracle: every port needs the same number of label amplitudes");
  }
  double norm = 0.0;
  for (const auto &a : amps) norm += std::norm(a);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw DomainError("oracle: label amplitudes must be normalized");
  }
}

}  // namespace

FockState::FockState(int ports, int labels) : ports_(ports), labels_(labels) {
  if (ports < 1 || labels < 1) {
    throw DimensionError("FockState: need at least one port and one label");
  }
}

Complex FockState::amplitude(const std::vector<int> &occupation) const {
  const auto it = amps_.find(occupation);
  return it == amps_.end() ? Complex{} : it->second;
}

double FockState::norm_squared() const {
  double total = 0.0;
  for (const auto &[occ, a] : amps_) total += std::norm(a);
  return total;
}

std::vector<int> FockState::occupation(std::span<const int> per_port, int label) const {
  if (per_port.size() != static_cast<std::size_t>(ports_) || label < 0 || label >= labels_) {
    throw DimensionError("FockState::occupation: bad port count or label");
  }
  std::vector<int> occ(static_cast<std::size_t>(ports_ * labels_), 0);
  for (int i = 0; i < ports_; ++i) {
    occ[static_cast<std::size_t>(i * labels_ + label)] = per_port[static_cast<std::size_t>(i)];
  }
  return occ;
}

std::vector<int> FockState::port_totals(const std::vector<int> &occupation) const {
  std::vector<int> totals(static_cast<std::size_t>(ports_), 0);
  for (int i = 0; i < ports_; ++i) {
    for (int j = 0; j < labels_; ++j) {
      totals[static_cast<std::size_t>(i)] += occupation[static_cast<std::size_t>(i * labels_ + j)];
    }
  }
  return totals;
}

double FockState::port_product_expectation() const {
  double total = 0.0;
  for (const auto &[occ, a] : amps_) {
    double prod = 1.0;
    for (int m : port_totals(occ)) prod *= m;
    total += std::norm(a) * prod;
  }
  return total;
}

FockState evolve(const Circuit &circuit, std::span<const PortMode> inputs) {
  const int ports = circuit.ports();
  if (ports > kMaxOraclePorts) {
    throw CapacityError("oracle: at most " + std::to_string(kMaxOraclePorts) + " ports");
  }
  if (inputs.size() != static_cast<std::size_t>(ports)) {
    throw DimensionError("oracle: one input per circuit port required");
  }
  const std::size_t labels = inputs.front().label_amplitudes.size();
  int photons = 0;
  for (const auto &in : inputs) {
    validate_labels(in.label_amplitudes, labels);
    if (in.photons < 0) throw DomainError("oracle: negative photon number");
    photons += in.photons;
  }
  if (photons > kMaxOraclePhotons) {
    throw CapacityError("oracle: " + std::to_string(photons) + " photons exceeds limit " +
                        std::to_string(kMaxOraclePhotons));
  }

  const ComplexMatrix &u = circuit.unitary();
  const auto n_labels = static_cast<int>(labels);
  Polynomial poly{{std::vector<int>(static_cast<std::size_t>(ports * n_labels), 0), Complex{1.0}}};
  double creation_norm = 1.0;
  for (int k = 0; k < ports; ++k) {
    const PortMode &in = inputs[static_cast<std::size_t>(k)];
    std::vector<LinearTerm> form;
    for (int i = 0; i < ports; ++i) {
      for (int j = 0; j < n_labels; ++j) {
        const Complex c =
            u(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) *
            in.label_amplitudes[static_cast<std::size_t>(j)];
        if (c != Complex{}) form.push_back({static_cast<std::size_t>(i * n_labels + j), c});
      }
    }
    for (int p = 0; p < in.photons; ++p) poly = multiply(poly, form);
    creation_norm /= std::sqrt(factorial(in.photons));
  }

  // (b^dagger)^m |0> = sqrt(m!) |m>
  FockState out(ports, n_labels);
  for (const auto &[occ, c] : poly) {
    double weight = creation_norm;
    for (int m : occ) weight *= std::sqrt(factorial(m));
    const Complex amp = c * weight;
    if (amp != Complex{}) out.add(occ, amp);
  }
  return out;
}

std::vector<MixtureComponent> fock_mixture(int photons) { return {{1.0, photons}}; }

std::vector<MixtureComponent> vac12_mixture(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw DomainError("vac12_mixture: probabilities must lie in [0, 1]");
  }
  return {{p, 0}, {(1.0 - p) * q, 1}, {(1.0 - p) * (1.0 - q), 2}};
}

std::vector<std::vector<Complex>> same_label(int ports) {
  return std::vector<std::vector<Complex>>(static_cast<std::size_t>(ports), {Complex{1.0}});
}

std::vector<std::vector<Complex>> distinct_labels(int ports) {
  std::vector<std::vector<Complex>> out;
  for (int k = 0; k < ports; ++k) {
    std::vector<Complex> v(static_cast<std::size_t>(ports));
    v[static_cast<std::size_t>(k)] = 1.0;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Complex>> sequential_overlap_labels(double xi) {
  const OverlapConfig c = OverlapConfig::from_xi(xi);
  const Complex e1[] = {1.0, 0.0, 0.0};
  const Complex e2[] = {0.0, 1.0, 0.0};
  const Complex e3[] = {0.0, 0.0, 1.0};
  auto mix = [](const Complex *a, const Complex *b, double overlap) {
    std::vector<Complex> v(3);
    for (std::size_t i = 0; i < 3; ++i) {
      v[i] = std::sqrt(overlap) * a[i] + std::sqrt(1.0 - overlap) * b[i];
    }
    return v;
  };
  if (xi <= 1.0) {
    // (0, M, 0): port 3 shares M of its intensity with port 2's label.
    return {{e1, e1 + 3}, {e2, e2 + 3}, mix(e2, e3, c.m23)};
  }
  // (M, 1, M): ports 2 and 3 share a label; port 1 overlaps both by M.
  return {mix(e2, e1, c.m12), {e2, e2 + 3}, {e2, e2 + 3}};
}

std::vector<PortInput> make_inputs(const std::vector<MixtureComponent> &mixture,
                                   const std::vector<std::vector<Complex>> &labels) {
  std::vector<PortInput> out;
  for (const auto &l : labels) out.push_back({mixture, l});
  return out;
}

double OracleResult::p_normalized() const {
  if (intensity_product <= 0.0) {
    throw DomainError("oracle: an input port has zero mean photon number");
  }
  return p_raw / intensity_product;
}

OracleResult oracle_coincidence(const Circuit &circuit, std::span<const PortInput> inputs) {
  if (inputs.size() != static_cast<std::size_t>(circuit.ports())) {
    throw DimensionError("oracle: one input per circuit port required");
  }
  double intensity = 1.0;
  for (const auto &in : inputs) {
    if (in.mixture.empty()) throw DomainError("oracle: empty mixture");
    double mean = 0.0;
    double weight = 0.0;
    for (const auto &c : in.mixture) {
      if (!(c.weight >= 0.0) || c.photons < 0) {
        throw DomainError("oracle: mixture weights and photon numbers must be non-negative");
      }
      mean += c.weight * c.photons;
      weight += c.weight;
    }
    if (std::abs(weight - 1.0) > kNormTolerance) {
      throw DomainError("oracle: mixture weights must sum to 1");
    }
    intensity *= mean;
  }

  // Walk the Cartesian product of mixture branches with an odometer.
  std::vector<std::size_t> pick(inputs.size(), 0);
  std::vector<PortMode> modes(inputs.size());
  double total = 0.0;
  while (true) {
    double weight = 1.0;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      const auto &c = inputs[k].mixture[pick[k]];
      weight *= c.weight;
      modes[k] = {c.photons, inputs[k].label_amplitudes};
    }
    if (weight > 0.0) total += weight * evolve(circuit, modes).port_product_expectation();

    std::size_t k = 0;
    while (k < inputs.size() && ++pick[k] == inputs[k].mixture.size()) {
      pick[k] = 0;
      ++k;
    }
    if (k == inputs.size()) break;
  }
  return {total, intensity};
}

}  // namespace photstat::oracle
