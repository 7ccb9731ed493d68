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

#include "photstat/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "photstat/circuits.hpp"
#include "photstat/coincidence.hpp"
#include "photstat/errors.hpp"
#include "photstat/visibility.hpp"

namespace photstat {

namespace {

constexpr double kMaxScanG2 = 1e6;
constexpr double kFlatObjective = 1e-15;

void require_increasing(std::span<const double> grid, const char *what) {
  if (grid.empty()) {
    throw DomainError(std::string(what) + " grid is empty");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw DomainError(std::string(what) + " grid must be strictly increasing");
    }
  }
}

void require_order3(const LabeledSource &s) {
  if (s.stats.max_order() < 3) {
    throw DomainError("source '" + s.label + "' needs statistics up to order 3");
  }
}

ScanRow make_row(double param, double p_id, double p_dist) {
  return {param, p_id, p_dist, visibility(p_id, p_dist).v};
}

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  const double ratio = std::log(hi / lo);
  for (int k = 0; k < count; ++k) {
    out[static_cast<std::size_t>(k)] = lo * std::exp(ratio * k / (count - 1));
  }
  out.back() = hi;
  return out;
}

double sym_visibility(double phi, double g2, double g3) {
  const double p_id = coincidence_sym_phase(phi, g2, g3, Distinguishability::kIndistinguishable);
  const double p_dist = coincidence_sym_phase(phi, g2, g3, Distinguishability::kDistinguishable);
  return visibility(p_id, p_dist).v;
}

}  // namespace

std::vector<double> linspace(double start, double stop, int count) {
  if (count < 1) {
    throw DomainError("grid count must be at least 1");
  }
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    throw DomainError("grid bounds must be finite");
  }
  if (count == 1) return {start};
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = (stop - start) / (count - 1);
  for (int k = 0; k < count; ++k) {
    out[static_cast<std::size_t>(k)] = start + step * k;
  }
  out.back() = stop;
  return out;
}

std::vector<LabeledSource> dft_reference_sources() {
  return {
      {"fock:1", fock_stats(1)},   {"fock:2", fock_stats(2)},
      {"fock:4", fock_stats(4)},   {"laser", laser_stats()},
      {"thermal", thermal_stats()}, {"thermal-shg", custom_stats(6.0, 90.0)},
  };
}

std::vector<LabeledSource> comparison_sources() {
  return {
      {"fock:1", fock_stats(1)},
      {"laser", laser_stats()},
      {"thermal", thermal_stats()},
      {"optimal-noise", diluted_laser_stats(optimal_dilution())},
  };
}

std::vector<ScanResult> scan_g2_dft(double g2_lo, double g2_hi, int count,
                                    std::span<const LabeledSource> points) {
  if (!(g2_lo >= 0.0 && g2_hi <= kMaxScanG2 && g2_lo <= g2_hi)) {
    throw DomainError("scan_g2_dft: g2 range must satisfy 0 <= lo <= hi <= 1e6");
  }
  const std::vector<double> grid = linspace(g2_lo, g2_hi, count);
  require_increasing(grid, "g2");
  for (const auto &p : points) require_order3(p);

  const InterferenceWeights dft3(dft(3));
  const InterferenceWeights hom(beamsplitter(0.5));
  auto dft_row = [&](double g2, double g3) {
    const double g[] = {1.0, 1.0, g2, g3};
    return make_row(g2, dft3.evaluate_symmetric(g, Distinguishability::kIndistinguishable),
                    dft3.evaluate_symmetric(g, Distinguishability::kDistinguishable));
  };

  ScanResult classical{"g2", "classical_bound", {}};
  ScanResult gaussian{"g2", "gaussian_bound", {}};
  ScanResult reference{"g2", "hom_reference", {}};
  for (double g2 : grid) {
    classical.rows.push_back(dft_row(g2, g2 * g2));
    const double floor = 2.0 - 3.0 * std::sqrt(g2);
    gaussian.rows.push_back(dft_row(g2, floor * floor));
    const double g[] = {1.0, 1.0, g2};
    reference.rows.push_back(
        make_row(g2, hom.evaluate_symmetric(g, Distinguishability::kIndistinguishable),
                 hom.evaluate_symmetric(g, Distinguishability::kDistinguishable)));
  }

  std::vector<ScanResult> out{std::move(classical), std::move(gaussian), std::move(reference)};
  for (const auto &p : points) {
    out.push_back({"g2", p.label, {dft_row(p.stats.g(2), p.stats.g(3))}});
  }
  return out;
}

std::vector<ScanResult> scan_overlap(std::span<const LabeledSource> sources,
                                     std::span<const double> xi_grid) {
  require_increasing(xi_grid, "xi");
  std::vector<ScanResult> out;
  for (const auto &s : sources) {
    require_order3(s);
    const double g2 = s.stats.g(2);
    const double g3 = s.stats.g(3);
    const double p_dist = coincidence_mismatch_n3(g2, g3, 0.0);
    ScanResult r{"xi", s.label, {}};
    for (double xi : xi_grid) {
      r.rows.push_back(make_row(xi, coincidence_mismatch_n3(g2, g3, xi), p_dist));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ScanResult> scan_phase(std::span<const LabeledSource> sources,
                                   std::span<const double> phi_grid) {
  require_increasing(phi_grid, "phi");
  std::vector<ScanResult> out;
  for (const auto &s : sources) {
    require_order3(s);
    const double g2 = s.stats.g(2);
    const double g3 = s.stats.g(3);
    ScanResult r{"phi", s.label, {}};
    for (double phi : phi_grid) {
      r.rows.push_back(
          make_row(phi, coincidence_sym_phase(phi, g2, g3, Distinguishability::kIndistinguishable),
                   coincidence_sym_phase(phi, g2, g3, Distinguishability::kDistinguishable)));
    }
    out.push_back(std::move(r));
  }
  return out;
}

GoldenSectionResult golden_section_maximize(const std::function<double(double)> &f, double lo,
                                            double hi, double tol) {
  if (!(lo < hi) || !(tol > 0.0)) {
    throw DomainError("golden_section_maximize: need lo < hi and tol > 0");
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iterations = 0;
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++iterations;
  }
  return fc >= fd ? GoldenSectionResult{c, fc, a, b, iterations}
                  : GoldenSectionResult{d, fd, a, b, iterations};
}

double classical_visibility(double phi, double g2) { return sym_visibility(phi, g2, g2 * g2); }

double fock_visibility(double phi, long long n) {
  if (n < 1) {
    throw DomainError("fock_visibility: photon number must be at least 1");
  }
  const double inv = 1.0 / static_cast<double>(n);
  return sym_visibility(phi, 1.0 - inv, (1.0 - inv) * (1.0 - 2.0 * inv));
}

OptimumReport maximize_classical(double phi, const ClassicalSearch &search) {
  if (!(search.g2_lo > 0.0 && search.g2_lo < search.g2_hi) || search.grid_points < 3) {
    throw DomainError("maximize_classical: need 0 < g2_lo < g2_hi and at least 3 grid points");
  }
  const std::vector<double> grid = log_grid(search.g2_lo, search.g2_hi, search.grid_points);
  std::vector<double> values;
  values.reserve(grid.size());
  for (double g2 : grid) values.push_back(classical_visibility(phi, g2));

  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  if (*hi_it - *lo_it <= kFlatObjective) {
    return {phi, grid.front(), values.front(), grid.front(), grid.back(), 0, true};
  }
  const auto best = static_cast<std::size_t>(hi_it - values.begin());
  const std::size_t left = best == 0 ? 0 : best - 1;
  const std::size_t right = std::min(best + 1, grid.size() - 1);

  const auto refined = golden_section_maximize(
      [phi](double g2) { return classical_visibility(phi, g2); }, grid[left], grid[right],
      search.tol);

  OptimumReport report{phi,          refined.x,          refined.fx, refined.lo,
                       refined.hi,   refined.iterations, false};
  if (values[best] > refined.fx) {
    // Monotone toward a domain edge: the grid end point beats every interior
    // probe.
    report.argmax = grid[best];
    report.value = values[best];
  }
  report.at_boundary = report.argmax - search.g2_lo <= search.tol ||
                       search.g2_hi - report.argmax <= search.tol;
  return report;
}

FockReport best_fock(double phi, long long n_max, long long n_min) {
  if (n_min < 1 || n_max < n_min) {
    throw DomainError("best_fock: need 1 <= n_min <= n_max");
  }
  FockReport r{phi, n_min, 0.0, n_min, 0.0, n_min, 0.0};
  r.v_max = r.v_min = fock_visibility(phi, n_min);
  r.v_max_abs = std::abs(r.v_max);
  for (long long n = n_min + 1; n <= n_max; ++n) {
    const double v = fock_visibility(phi, n);
    if (v > r.v_max) {
      r.v_max = v;
      r.n_max_v = n;
    }
    if (v < r.v_min) {
      r.v_min = v;
      r.n_min_v = n;
    }
    if (std::abs(v) > r.v_max_abs) {
      r.v_max_abs = std::abs(v);
      r.n_max_abs = n;
    }
  }
  return r;
}

CrossoverReport crossover_window(double phi_lo, double phi_hi, int count,
                                 const CrossoverOptions &options) {
  if (count < 2 || !(phi_lo < phi_hi)) {
    throw DomainError("crossover_window: need phi_lo < phi_hi and at least 2 points");
  }
  const double step = (phi_hi - phi_lo) / (count - 1);
  if (step > kCrossoverMaxStep * (1.0 + 1e-12)) {
    throw DomainError("crossover_window: phi step exceeds 1e-3 pi");
  }
  if (options.noise_g2 && !(*options.noise_g2 >= 0.0)) {
    throw DomainError("crossover_window: noise g2 must be non-negative");
  }

  CrossoverReport report{};
  for (double phi : linspace(phi_lo, phi_hi, count)) {
    CrossoverRow row{};
    row.phi = phi;
    row.v_laser = classical_visibility(phi, 1.0);
    const FockReport fock = best_fock(phi, options.fock_n_max, options.fock_n_min);
    row.fock_n = fock.n_max_v;
    row.v_fock = fock.v_max;
    row.fock_margin = row.v_fock - row.v_laser;
    row.noise_g2 = options.noise_g2 ? *options.noise_g2 : maximize_classical(phi).argmax;
    row.v_noise = classical_visibility(phi, row.noise_g2);
    row.noise_margin = row.v_noise - row.v_laser;
    row.both_exceed = row.fock_margin > 0.0 && row.noise_margin > 0.0;
    report.rows.push_back(row);
  }

  std::size_t best_start = 0;
  std::size_t best_len = 0;
  for (std::size_t i = 0; i < report.rows.size();) {
    if (!report.rows[i].both_exceed) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < report.rows.size() && report.rows[j].both_exceed) ++j;
    if (j - i > best_len) {
      best_start = i;
      best_len = j - i;
    }
    i = j;
  }
  report.window_found = best_len > 0;
  if (report.window_found) {
    report.window_lo = report.rows[best_start].phi;
    report.window_hi = report.rows[best_start + best_len - 1].phi;
    for (std::size_t i = best_start; i < best_start + best_len; ++i) {
      report.max_fock_margin_in_window =
          std::max(report.max_fock_margin_in_window, report.rows[i].fock_margin);
      report.max_noise_margin_in_window =
          std::max(report.max_noise_margin_in_window, report.rows[i].noise_margin);
    }
  }
  return report;
}

}  // namespace photstat
