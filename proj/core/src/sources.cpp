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

#include "photstat/sources.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "photstat/errors.hpp"

namespace photstat {

namespace {

constexpr double kClassifyTolerance = 1e-12;

void require_order(int max_order) {
  if (max_order < 1) {
    throw DomainError("max_order must be at least 1, got " + std::to_string(max_order));
  }
}

}  // namespace

SourceStats::SourceStats(double mean_n, std::span<const double> higher) : mean_n_(mean_n) {
  if (!std::isfinite(mean_n) || mean_n < 0.0) {
    throw DomainError("SourceStats: mean photon number must be finite and non-negative");
  }
  g_.reserve(higher.size() + 2);
  g_.push_back(1.0);
  g_.push_back(1.0);
  for (std::size_t i = 0; i < higher.size(); ++i) {
    const double v = higher[i];
    const std::string order = std::to_string(i + 2);
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("SourceStats: g(" + order + ") must be finite and non-negative");
    }
    if (v > kMaxCorrelation) {
      throw DomainError("SourceStats: g(" + order + ") exceeds the 1e12 cap");
    }
    g_.push_back(v);
  }
}

double SourceStats::g(int m) const {
  if (m < 0 || m > max_order()) {
    throw DomainError("SourceStats: g(" + std::to_string(m) + ") requested but statistics are "
                      "defined only up to order " + std::to_string(max_order()));
  }
  return g_[static_cast<std::size_t>(m)];
}

double SourceStats::factorial_moment(int m) const {
  return m == 0 ? 1.0 : std::pow(mean_n_, m) * g(m);
}

SourceStats SourceStats::with_mean(double mean_n) const {
  return SourceStats(mean_n, std::span<const double>(g_).subspan(2));
}

SourceStats fock_stats(int n, int max_order) {
  if (n < 1) {
    throw DomainError("fock_stats: photon number must be at least 1");
  }
  require_order(max_order);
  std::vector<double> higher;
  double g = 1.0;
  for (int m = 2; m <= max_order; ++m) {
    // g(m) = g(m-1) * (n - m + 1) / n
    g = m > n ? 0.0 : g * static_cast<double>(n - m + 1) / n;
    higher.push_back(g);
  }
  return SourceStats(static_cast<double>(n), higher);
}

SourceStats laser_stats(int max_order, double mean_n) {
  require_order(max_order);
  const std::vector<double> higher(static_cast<std::size_t>(max_order - 1), 1.0);
  return SourceStats(mean_n, higher);
}

SourceStats thermal_stats(int max_order, double mean_n) {
  require_order(max_order);
  std::vector<double> higher;
  double factorial = 1.0;
  for (int m = 2; m <= max_order; ++m) {
    factorial *= m;
    higher.push_back(factorial);
  }
  return SourceStats(mean_n, higher);
}

SourceStats diluted_laser_stats(double p, int max_order, double mean_n) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw DomainError("diluted_laser_stats: p must lie in (0, 1]");
  }
  require_order(max_order);
  std::vector<double> higher;
  for (int m = 2; m <= max_order; ++m) {
    higher.push_back(std::pow(p, 1 - m));
  }
  return SourceStats(mean_n, higher);
}

SourceStats vac12_mixture_stats(double p, double q, int max_order) {
  if (!(p >= 0.0 && p < 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw DomainError("vac12_mixture_stats: need 0 <= p < 1 and 0 <= q <= 1");
  }
  require_order(max_order);
  const double mean = (1.0 - p) * (2.0 - q);
  if (mean <= 0.0) {
    throw DomainError("vac12_mixture_stats: all-vacuum mixture has no photons");
  }
  // <n(n-1)> = 2 (1-p)(1-q); higher factorial moments vanish.
  std::vector<double> higher(static_cast<std::size_t>(std::max(max_order - 1, 0)), 0.0);
  if (max_order >= 2) {
    higher[0] = 2.0 * (1.0 - q) / ((1.0 - p) * (2.0 - q) * (2.0 - q));
  }
  return SourceStats(mean, higher);
}

SourceStats custom_stats(double g2, double g3, double mean_n) {
  return SourceStats(mean_n, {g2, g3});
}

double optimal_dilution() { return 6.0 / (1.0 + std::sqrt(109.0)); }

StatClass classify(const SourceStats &stats) {
  if (stats.max_order() < 3) {
    throw DomainError("classify: statistics must be defined up to order 3");
  }
  const double g2 = stats.g(2);
  const double g3 = stats.g(3);
  StatClass out{};
  if (std::abs(g2 - 1.0) <= kClassifyTolerance) {
    out.statistics = PhotonStatistics::kPoissonian;
  } else if (g2 < 1.0) {
    out.statistics = PhotonStatistics::kSubPoissonian;
  } else {
    out.statistics = PhotonStatistics::kSuperPoissonian;
  }
  out.classical_consistent = g3 >= g2 * g2 - kClassifyTolerance;
  const double gauss = 2.0 - 3.0 * std::sqrt(g2);
  out.gaussian_pure_consistent = g3 >= gauss * gauss - kClassifyTolerance;
  out.nonclassical = out.statistics == PhotonStatistics::kSubPoissonian;
  return out;
}

std::string to_string(PhotonStatistics s) {
  switch (s) {
    case PhotonStatistics::kSubPoissonian:
      return "sub-Poissonian";
    case PhotonStatistics::kPoissonian:
      return "Poissonian";
    case PhotonStatistics::kSuperPoissonian:
      return "super-Poissonian";
  }
  return "unknown";
}

}  // namespace photstat
