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

#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "photstat/sources.hpp"

namespace photstat {

/// `count` evenly spaced values from start to stop inclusive. count == 1
/// yields {start}. Throws DomainError for count < 1 or non-finite bounds.
std::vector<double> linspace(double start, double stop, int count);

/// A source with a display label. Statistics must reach order 3.
struct LabeledSource {
  std::string label;
  SourceStats stats;
};

struct ScanRow {
  double param;
  double p_id;
  double p_dist;
  double v;
};

/// One curve: rows ordered by strictly increasing parameter.
struct ScanResult {
  std::string parameter;
  std::string source;
  std::vector<ScanRow> rows;
};

/// Points plotted over the DFT g2 axis: Fock 1/2/4, laser, thermal and its
/// second harmonic (g2 = 6, g3 = 90).
std::vector<LabeledSource> dft_reference_sources();

/// Single photon, laser, thermal and the DFT-optimal diluted laser.
std::vector<LabeledSource> comparison_sources();

/// DFT visibility over g2: the classical-bound curve (g3 = g2^2), the
/// pure-Gaussian curve, the balanced two-port reference, then one
/// single-row result per source in `points`. g2 range must lie in [0, 1e6].
std::vector<ScanResult> scan_g2_dft(double g2_lo, double g2_hi, int count,
                                    std::span<const LabeledSource> points);

/// DFT visibility against sequential mode overlap xi; rows hold
/// (xi, P(xi), P_dist, V). xi values must lie in [0, 2].
std::vector<ScanResult> scan_overlap(std::span<const LabeledSource> sources,
                                     std::span<const double> xi_grid);

/// symmetric(phi) visibility with the raw normalized probabilities.
std::vector<ScanResult> scan_phase(std::span<const LabeledSource> sources,
                                   std::span<const double> phi_grid);

struct GoldenSectionResult {
  double x;
  double fx;
  double lo;
  double hi;
  int iterations;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi],
/// stopping when the bracket is narrower than `tol`.
GoldenSectionResult golden_section_maximize(const std::function<double(double)> &f, double lo,
                                            double hi, double tol);

struct ClassicalSearch {
  double g2_lo = 1.0;
  double g2_hi = 1e4;
  int grid_points = 64;
  double tol = 1e-10;
};

struct OptimumReport {
  double phi;
  double argmax;
  double value;
  double bracket_lo;
  double bracket_hi;
  int iterations;
  /// The objective was flat on the coarse grid, or peaked at an end of the
  /// search domain.
  bool at_boundary;
};

/// Maximizes the symmetric(phi) visibility over classical light on the
/// bound-saturating manifold g3 = g2^2: log-spaced coarse grid, then
/// golden-section refinement in the best bracket.
OptimumReport maximize_classical(double phi, const ClassicalSearch &search = {});

/// Visibility of symmetric(phi) for classical light with g3 = g2^2.
double classical_visibility(double phi, double g2);

/// Visibility of symmetric(phi) for n-photon Fock inputs.
double fock_visibility(double phi, long long n);

struct FockReport {
  double phi;
  long long n_max_v;
  double v_max;
  long long n_min_v;
  double v_min;
  long long n_max_abs;
  double v_max_abs;  // |V| at n_max_abs
};

/// Scans n in [n_min, n_max] and reports the largest V, the most negative V
/// and the largest |V|. Ties resolve to the smallest n.
FockReport best_fock(double phi, long long n_max, long long n_min = 1);

struct CrossoverOptions {
  long long fock_n_min = 3;
  long long fock_n_max = 10000;
  /// Fixed noise statistics (g3 = g2^2). When empty, g2 is re-optimized at
  /// every phi.
  std::optional<double> noise_g2;
};

struct CrossoverRow {
  double phi;
  double v_laser;
  long long fock_n;
  double v_fock;
  double fock_margin;
  double noise_g2;
  double v_noise;
  double noise_margin;
  bool both_exceed;
};

struct CrossoverReport {
  std::vector<CrossoverRow> rows;
  bool window_found;
  /// Longest contiguous run of rows with both margins positive.
  double window_lo;
  double window_hi;
  double max_fock_margin_in_window;
  double max_noise_margin_in_window;
};

inline constexpr double kCrossoverMaxStep = 1e-3 * std::numbers::pi;

/// Compares the best Fock input (n >= fock_n_min) and classical noise with
/// the laser visibility over phi in [phi_lo, phi_hi]. The grid step must
/// not exceed kCrossoverMaxStep.
CrossoverReport crossover_window(double phi_lo, double phi_hi, int count,
                                 const CrossoverOptions &options = {});

}  // namespace photstat
