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

#include "photstat/visibility.hpp"

#include <cmath>
#include <sstream>

#include "photstat/coincidence.hpp"
#include "photstat/errors.hpp"
#include "photstat/sources.hpp"

namespace photstat {

VisibilityPoint visibility(double p_id, double p_dist) {
  if (!(p_dist > kVisibilityEpsilon)) {
    std::ostringstream msg;
    msg << "visibility: distinguishable probability " << p_dist << " is degenerate";
    throw DomainError(msg.str());
  }
  return {1.0 - p_id / p_dist, p_id, p_dist};
}

double v2_closed(double reflectance, double g2) {
  if (!(reflectance >= 0.0 && reflectance <= 1.0)) {
    throw DomainError("v2_closed: reflectance must lie in [0, 1]");
  }
  if (!(g2 >= 0.0)) {
    throw DomainError("v2_closed: g2 must be non-negative");
  }
  const double x = 2.0 * reflectance * (1.0 - reflectance);
  return x / (x * g2 + 1.0 - x);
}

double v3_dft(double g2, double g3) {
  if (!(g2 >= 0.0) || !(g3 >= 0.0)) {
    throw DomainError("v3_dft: correlations must be non-negative");
  }
  return (6.0 * g2 - 1.0) / (g3 + 6.0 * g2 + 2.0);
}

double v3_classical_bound(double g2) { return v3_dft(g2, g2 * g2); }

double v3_gaussian_bound(double g2) {
  if (!(g2 >= 0.0)) {
    throw DomainError("v3_gaussian_bound: g2 must be non-negative");
  }
  const double floor = 2.0 - 3.0 * std::sqrt(g2);
  return v3_dft(g2, floor * floor);
}

double v3_fock(long long n) {
  if (n < 1) {
    throw DomainError("v3_fock: photon number must be at least 1");
  }
  const double inv = 1.0 / static_cast<double>(n);
  const double g2 = 1.0 - inv;
  const double g3 = (1.0 - inv) * (1.0 - 2.0 * inv);
  return v3_dft(g2, g3);
}

double v3_mixture(double p, double q) {
  const SourceStats s = vac12_mixture_stats(p, q, 3);
  return v3_dft(s.g(2), 0.0);
}

double v3_mismatch(double g2, double g3, double xi) {
  const double p_xi = coincidence_mismatch_n3(g2, g3, xi);
  const double p_dist = coincidence_mismatch_n3(g2, g3, 0.0);
  return visibility(p_xi, p_dist).v;
}

}  // namespace photstat
