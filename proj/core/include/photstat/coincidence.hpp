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

#include <span>
#include <vector>

#include "photstat/circuits.hpp"
#include "photstat/permanent.hpp"
#include "photstat/sources.hpp"

namespace photstat {

/// Largest port count accepted by enumerate_exponent_tuples and the general
/// coincidence engines.
inline constexpr int kMaxEnginePorts = 8;

/// Occupation pattern s = (s_1..s_N) with sum s_i = N: input port i
/// contributes s_i creation operators to a term of the coincidence sum.
struct ExponentTuple {
  std::vector<int> s;

  /// d(s): each port index j (0-based) repeated s_j times, non-decreasing.
  std::vector<int> mode_assignment() const;
  /// prod_i s_i!
  double factorial_product() const;

  bool operator==(const ExponentTuple &) const = default;
  auto operator<=>(const ExponentTuple &) const = default;
};

/// All compositions of N into N non-negative parts in lexicographic order;
/// there are C(2N-1, N-1) of them. Requires 1 <= N <= kMaxEnginePorts.
std::vector<ExponentTuple> enumerate_exponent_tuples(int n);

/// Per-port input statistics. Ports are statistically independent and carry
/// no mutual phase reference.
class InputEnsemble {
 public:
  explicit InputEnsemble(std::vector<SourceStats> ports);
  /// Every port gets the same statistics and mean photon number.
  static InputEnsemble symmetric(const SourceStats &stats, int ports);

  int ports() const noexcept { return static_cast<int>(ports_.size()); }
  const SourceStats &port(int i) const { return ports_.at(static_cast<std::size_t>(i)); }
  std::span<const SourceStats> stats() const noexcept { return ports_; }
  /// prod_i <n_i>
  double intensity_product() const;

 private:
  std::vector<SourceStats> ports_;
};

struct CoincidenceResult {
  /// <:n_1 ... n_N:> at the outputs.
  double p_raw;
  /// prod_i <n_i> over the inputs.
  double intensity_product;

  /// p_raw / intensity_product. Throws DomainError when an input port is
  /// empty, since the normalization is then undefined.
  double p_normalized() const;
};

enum class Distinguishability { kIndistinguishable, kDistinguishable };

/// Precomputed permanent weights for one circuit.
///
/// For every exponent tuple s the indistinguishable weight is
/// |Per(U_d(s))|^2 / (prod s_i!)^2 and the distinguishable weight is
/// Per(V_d(s)) / prod s_i! with V = |U|^2 entrywise. A coincidence
/// probability is then sum_s weight(s) prod_i <n_i>^{s_i} g_i^{(s_i)}.
///
/// Immutable after construction, so one instance can be shared by scan
/// workers.
class InterferenceWeights {
 public:
  explicit InterferenceWeights(const Circuit &circuit, PermanentFn perm = permanent);

  int ports() const noexcept { return ports_; }
  std::span<const ExponentTuple> tuples() const noexcept { return tuples_; }
  std::span<const double> weights(Distinguishability d) const noexcept {
    return d == Distinguishability::kIndistinguishable ? id_weights_ : dist_weights_;
  }

  /// Throws DimensionError on port-count mismatch and DomainError, naming
  /// the port and order, when a port's statistics stop short of order N.
  CoincidenceResult evaluate(const InputEnsemble &inputs, Distinguishability d) const;

  /// Normalized probability for identical ports with correlations
  /// g(0..N) (g[0] = g[1] = 1).
  double evaluate_symmetric(std::span<const double> g, Distinguishability d) const;

 private:
  int ports_;
  std::vector<ExponentTuple> tuples_;
  std::vector<double> id_weights_;
  std::vector<double> dist_weights_;
};

/// Indistinguishable-photon coincidence for any N via the permanent sum.
CoincidenceResult coincidence_id_general(const Circuit &circuit, const InputEnsemble &inputs,
                                         PermanentFn perm = permanent);

/// Fully distinguishable limit: the same sum over permanents of |u_ij|^2.
CoincidenceResult coincidence_dist_general(const Circuit &circuit, const InputEnsemble &inputs,
                                           PermanentFn perm = permanent);

/// Term-by-term expansion of the three-port coincidence in matrix elements,
/// allowing different means and statistics per port. Independent of the
/// permanent routines; used to cross-check the general engines.
CoincidenceResult coincidence_n3_explicit(const Circuit &circuit, const InputEnsemble &inputs,
                                          Distinguishability d);

/// Pairwise mode overlaps along the sequential alignment path.
/// xi in [0, 1]: (M12, M23, M31) = (0, xi, 0).
/// xi in (1, 2]: (M12, M23, M31) = (xi - 1, 1, xi - 1).
struct OverlapConfig {
  double xi;
  double m12;
  double m23;
  double m31;

  static OverlapConfig from_xi(double xi);
  /// Inverse of from_xi. Throws DomainError for triples off the path.
  static OverlapConfig from_overlaps(double m12, double m23, double m31);
};

/// Normalized three-port DFT coincidence for identical inputs (g2, g3) at
/// partial mode overlap xi in [0, 2]. xi = 0 gives the distinguishable
/// value and xi = 2 the indistinguishable one.
double coincidence_mismatch_n3(double g2, double g3, double xi);

/// Closed-form normalized coincidence for symmetric(phi) with identical
/// inputs (g2, g3).
double coincidence_sym_phase(double phi, double g2, double g3, Distinguishability d);

}  // namespace photstat
