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

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace photstat {

/// Default highest correlation order stored by the source constructors.
inline constexpr int kDefaultMaxOrder = 8;
/// Correlation values above this are rejected rather than propagated.
inline constexpr double kMaxCorrelation = 1e12;

/// Photon statistics of one input port, described only by its mean photon
/// number and normalized factorial moments g^(m) = <:n^m:>/<n>^m.
///
/// Correlations are stored from order 0: g(0) = g(1) = 1 always, so a port
/// that contributes s photons to a term weighs in as mean_n^s * g(s) for
/// every s including 0.
class SourceStats {
 public:
  /// `higher` holds g^(2), g^(3), ... in order. Throws DomainError on
  /// negative or non-finite values, values above kMaxCorrelation, or a
  /// negative mean.
  SourceStats(double mean_n, std::span<const double> higher);
  SourceStats(double mean_n, std::initializer_list<double> higher)
      : SourceStats(mean_n, std::span<const double>(higher.begin(), higher.size())) {}

  double mean_n() const noexcept { return mean_n_; }
  int max_order() const noexcept { return static_cast<int>(g_.size()) - 1; }

  /// g^(m) for 0 <= m <= max_order(). Throws DomainError otherwise.
  double g(int m) const;
  /// Full sequence g(0..max_order).
  std::span<const double> g_sequence() const noexcept { return g_; }

  /// <:n^m:> = mean_n^m g^(m), the m-th factorial moment.
  double factorial_moment(int m) const;

  /// Same correlations at a different mean photon number.
  SourceStats with_mean(double mean_n) const;

  bool operator==(const SourceStats &) const = default;

 private:
  double mean_n_;
  std::vector<double> g_;
};

/// n-photon Fock state: g^(m) = n!/((n-m)! n^m) for m <= n and 0 beyond.
SourceStats fock_stats(int n, int max_order = kDefaultMaxOrder);

/// Coherent (laser) light, g^(m) = 1.
SourceStats laser_stats(int max_order = kDefaultMaxOrder, double mean_n = 1.0);

/// Single-mode thermal light, g^(m) = m!.
SourceStats thermal_stats(int max_order = kDefaultMaxOrder, double mean_n = 1.0);

/// Laser at fixed intensity with probability p, vacuum otherwise:
/// g^(m) = p^(1-m). `mean_n` is the mean of the mixture.
SourceStats diluted_laser_stats(double p, int max_order = kDefaultMaxOrder, double mean_n = 1.0);

/// Mixture of |0>, |1>, |2> with weights p, (1-p)q, (1-p)(1-q).
SourceStats vac12_mixture_stats(double p, double q, int max_order = kDefaultMaxOrder);

/// Arbitrary statistics specified through g^(2) and g^(3) only.
SourceStats custom_stats(double g2, double g3, double mean_n = 1.0);

/// Diluted-laser probability that maximizes the classical DFT visibility,
/// 6/(1+sqrt(109)).
double optimal_dilution();

enum class PhotonStatistics { kSubPoissonian, kPoissonian, kSuperPoissonian };

struct StatClass {
  PhotonStatistics statistics;
  /// g^(3) >= (g^(2))^2, the Cauchy-Schwarz condition for classical waves.
  bool classical_consistent;
  /// g^(3) >= (2 - 3 sqrt(g^(2)))^2, required of pure Gaussian states.
  bool gaussian_pure_consistent;
  /// g^(2) < 1. Fock states can meet the Cauchy-Schwarz condition with
  /// equality, so this is the nonclassicality marker.
  bool nonclassical;
};

/// Requires max_order() >= 3.
StatClass classify(const SourceStats &stats);

std::string to_string(PhotonStatistics s);

}  // namespace photstat
