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

namespace photstat {

/// Denominators at or below this are treated as degenerate.
inline constexpr double kVisibilityEpsilon = 1e-12;

/// V = 1 - p_id / p_dist. Positive V is a coincidence dip, negative V a bump.
struct VisibilityPoint {
  double v;
  double p_id;
  double p_dist;
};

/// Throws DomainError when p_dist <= kVisibilityEpsilon.
VisibilityPoint visibility(double p_id, double p_dist);

/// Two-port visibility 2RT / (2RT g2 + 1 - 2RT).
double v2_closed(double reflectance, double g2);

/// Three-port DFT visibility (6 g2 - 1) / (g3 + 6 g2 + 2).
double v3_dft(double g2, double g3);

/// Ceiling on v3_dft for classical light, attained at g3 = g2^2.
double v3_classical_bound(double g2);

/// v3_dft with g3 at the pure-Gaussian limit (2 - 3 sqrt(g2))^2.
double v3_gaussian_bound(double g2);

/// v3_dft for n-photon Fock inputs. Requires n >= 1.
double v3_fock(long long n);

/// v3_dft for the vacuum / one-photon / two-photon mixture (g3 = 0).
double v3_mixture(double p, double q);

/// Visibility against the fully distinguishable DFT baseline when the
/// numerator is the partially mode-matched coincidence at xi.
double v3_mismatch(double g2, double g3, double xi);

}  // namespace photstat
