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

#include <map>
#include <span>
#include <vector>

#include "photstat/circuits.hpp"
#include "photstat/complex_matrix.hpp"

/// Brute-force Fock-space reference for small instances. Slow and exact;
/// exists to check the permanent-sum engines independently.
namespace photstat::oracle {

inline constexpr int kMaxOraclePhotons = 6;
inline constexpr int kMaxOraclePorts = 4;

/// Pure state over (port, internal label) modes. Mode index is
/// port * labels + label; basis states are occupation tuples.
class FockState {
 public:
  FockState(int ports, int labels);

  int ports() const noexcept { return ports_; }
  int labels() const noexcept { return labels_; }
  const std::map<std::vector<int>, Complex> &amplitudes() const noexcept { return amps_; }

  /// Zero for basis states absent from the expansion.
  Complex amplitude(const std::vector<int> &occupation) const;
  double norm_squared() const;

  /// Occupation tuple with `per_port[i]` photons on label `label` of port i.
  std::vector<int> occupation(std::span<const int> per_port, int label = 0) const;
  /// Photons in each port summed over internal labels.
  std::vector<int> port_totals(const std::vector<int> &occupation) const;

  /// E[prod_i m_i] with m_i the total photon count of output port i.
  double port_product_expectation() const;

  void add(const std::vector<int> &occupation, Complex amp) { amps_[occupation] += amp; }

 private:
  int ports_;
  int labels_;
  std::map<std::vector<int>, Complex> amps_;
};

/// `photons` photons in the internal mode sum_j c_j a_{k,j}^dagger of one
/// input port. The label amplitudes must be normalized.
struct PortMode {
  int photons;
  std::vector<Complex> label_amplitudes;
};

/// Applies the circuit identically to every internal label:
/// a_{k,j}^dagger -> sum_i u(i, k) b_{i,j}^dagger, expanding the product of
/// transformed creation operators monomial by monomial.
FockState evolve(const Circuit &circuit, std::span<const PortMode> inputs);

struct MixtureComponent {
  double weight;
  int photons;
};

/// Fock-diagonal mixture fed into one port's internal mode.
struct PortInput {
  std::vector<MixtureComponent> mixture;
  std::vector<Complex> label_amplitudes;
};

std::vector<MixtureComponent> fock_mixture(int photons);
/// |0>, |1>, |2> with weights p, (1-p)q, (1-p)(1-q).
std::vector<MixtureComponent> vac12_mixture(double p, double q);

/// Every port on internal label 0 (fully indistinguishable).
std::vector<std::vector<Complex>> same_label(int ports);
/// Port k on its own label k (fully distinguishable).
std::vector<std::vector<Complex>> distinct_labels(int ports);
/// Three-port labels realizing the sequential overlap path at xi in [0, 2].
std::vector<std::vector<Complex>> sequential_overlap_labels(double xi);

/// Builds one PortInput per port from a shared mixture and a label pattern.
std::vector<PortInput> make_inputs(const std::vector<MixtureComponent> &mixture,
                                   const std::vector<std::vector<Complex>> &labels);

struct OracleResult {
  double p_raw;
  double intensity_product;
  double p_normalized() const;
};

/// <:n_1^out ... n_N^out:> by explicit evolution of every mixture branch.
/// Output ports are distinct modes, so the normal ordering reduces to the
/// plain product of port totals.
OracleResult oracle_coincidence(const Circuit &circuit, std::span<const PortInput> inputs);

}  // namespace photstat::oracle
