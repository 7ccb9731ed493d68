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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "photstat/circuits.hpp"
#include "photstat/cli/commands.hpp"
#include "photstat/cli/verify.hpp"
#include "photstat/coincidence.hpp"
#include "photstat/fock_oracle.hpp"
#include "photstat/optimize.hpp"
#include "photstat/permanent.hpp"
#include "photstat/random.hpp"
#include "photstat/sources.hpp"
#include "photstat/visibility.hpp"

namespace {

using namespace photstat;
using std::numbers::pi;

constexpr auto kId = Distinguishability::kIndistinguishable;
constexpr auto kDist = Distinguishability::kDistinguishable;

/// Collects failures with the worst observed error.
class Outcome {
 public:
  void expect(bool ok, const std::string &what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void close(double got, double want, double tol, const std::string &what) {
    const double err = std::abs(got - want) / std::max(1.0, std::abs(want));
    worst_ = std::max(worst_, err);
    std::ostringstream s;
    s.precision(17);
    s << what << ": got " << got << " want " << want;
    expect(err <= tol, s.str());
  }
  void within(double got, double lo, double hi, const std::string &what) {
    std::ostringstream s;
    s.precision(17);
    s << what << ": " << got << " not in [" << lo << ", " << hi << "]";
    expect(got >= lo && got <= hi, s.str());
  }
  bool pass() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks, worst rel err " << worst_;
    for (const auto &f : failures_) s << "\n      " << f;
    return s.str();
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  double worst_ = 0.0;
  std::vector<std::string> failures_;
};

double hom_reference_v(double r, double g2) {
  const double rt = r * (1.0 - r);
  const double id = 1.0 - 2.0 * rt * (2.0 - g2);
  const double dist = 1.0 - 2.0 * rt * (1.0 - g2);
  return 1.0 - id / dist;
}

void ac1(Outcome &o) {
  o.close(v2_closed(0.5, 0.0), 1.0, 1e-12, "V(1/2, 0)");
  o.close(v2_closed(0.5, 1.0), 0.5, 1e-12, "V(1/2, 1)");
  o.close(v2_closed(0.5, 2.0), 1.0 / 3, 1e-12, "V(1/2, 2)");
  for (int i = 0; i < 10; ++i) {
    const double r = 0.05 + 0.9 * i / 9.0;
    const InterferenceWeights w(beamsplitter(r));
    for (int j = 0; j < 10; ++j) {
      const double g2 = 5.0 * j / 9.0;
      const double g[] = {1.0, 1.0, g2};
      const double v = visibility(w.evaluate_symmetric(g, kId), w.evaluate_symmetric(g, kDist)).v;
      o.close(v, hom_reference_v(r, g2), 1e-12, "engine R=" + std::to_string(r));
      o.close(v2_closed(r, g2), hom_reference_v(r, g2), 1e-12, "closed R=" + std::to_string(r));
    }
  }
}

void ac2(Outcome &o) {
  struct Anchor {
    const char *name;
    SourceStats stats;
    double id, dist, v;
  };
  const Anchor anchors[] = {
      {"single photon", fock_stats(1), 1.0 / 3, 2.0 / 9, -0.5},
      {"laser", laser_stats(), 4.0 / 9, 1.0, 5.0 / 9},
      {"thermal", thermal_stats(), 1.0, 20.0 / 9, 11.0 / 20},
  };
  const Circuit c = dft(3);
  for (const auto &a : anchors) {
    const auto ens = InputEnsemble::symmetric(a.stats, 3);
    const double id = coincidence_id_general(c, ens).p_normalized();
    const double dist = coincidence_dist_general(c, ens).p_normalized();
    o.close(id, a.id, 1e-12, std::string(a.name) + " p_id");
    o.close(dist, a.dist, 1e-12, std::string(a.name) + " p_dist");
    o.close(visibility(id, dist).v, a.v, 1e-12, std::string(a.name) + " v");
    o.close(v3_dft(a.stats.g(2), a.stats.g(3)), a.v, 1e-12, std::string(a.name) + " closed v");
  }
}

void ac3(Outcome &o) {
  const OptimumReport r = maximize_classical(2 * pi / 3);
  o.close(r.value, (19 - std::sqrt(109.0)) / 14, 1e-6, "V*");
  o.close(r.argmax, (1 + std::sqrt(109.0)) / 6, 1e-4, "g2*");
}

void ac4(Outcome &o) {
  double best = -1.0, arg = 0.0;
  for (int k = 0; k <= 500000; ++k) {
    const double g2 = 0.5 + 4.5 * k / 500000.0;
    const double v = v3_gaussian_bound(g2);
    if (v > best) {
      best = v;
      arg = g2;
    }
  }
  o.within(best, 0.575, 0.585, "max V");
  o.within(arg, 1.6, 1.8, "argmax g2");
  o.close(v3_gaussian_bound(1e8), 0.4, 1e-3, "V(1e8)");
}

void ac5(Outcome &o) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const double g2 = 4.0 * unit(rng);
    const double g3 = 16.0 * unit(rng);
    const double joint = g3 / 9.0 + 4.0 * g2 / 9.0 + 1.0 / 9.0;
    o.close(coincidence_mismatch_n3(g2, g3, std::nextafter(1.0, 0.0)), joint, 1e-12, "lower branch");
    o.close(coincidence_mismatch_n3(g2, g3, 1.0), joint, 1e-12, "joint");
    o.close(coincidence_mismatch_n3(g2, g3, std::nextafter(1.0, 2.0)), joint, 1e-12, "upper branch");
  }
  o.close(v3_mismatch(0.0, 0.0, 2.0), -0.5, 1e-12, "single photon xi=2");
  o.close(v3_mismatch(1.0, 1.0, 2.0), 5.0 / 9, 1e-12, "laser xi=2");
  o.close(v3_mismatch(2.0, 6.0, 2.0), 11.0 / 20, 1e-12, "thermal xi=2");
  o.close(coincidence_mismatch_n3(0.0, 0.0, 0.0), 2.0 / 9, 1e-12, "single photon xi=0");
  o.close(coincidence_mismatch_n3(1.0, 1.0, 0.0), 1.0, 1e-12, "laser xi=0");
  o.close(coincidence_mismatch_n3(2.0, 6.0, 0.0), 20.0 / 9, 1e-12, "thermal xi=0");
  for (double xi : {0.0, 1.0, 2.0}) {
    const auto in = oracle::make_inputs(oracle::fock_mixture(1), oracle::sequential_overlap_labels(xi));
    o.close(oracle::oracle_coincidence(dft(3), in).p_normalized(), coincidence_mismatch_n3(0.0, 0.0, xi), 1e-10,
            "oracle xi=" + std::to_string(xi));
  }
}

double engine_v(const Circuit &c, const SourceStats &s) {
  const auto ens = InputEnsemble::symmetric(s, c.ports());
  return visibility(coincidence_id_general(c, ens).p_normalized(), coincidence_dist_general(c, ens).p_normalized())
      .v;
}

void ac6(Outcome &o) {
  o.close(engine_v(symmetric(pi), fock_stats(1)), 168.0 / 177, 1e-12, "V(pi) single photon");
  const std::vector<SourceStats> sources{fock_stats(1), fock_stats(2), laser_stats(), thermal_stats(),
                                         diluted_laser_stats(optimal_dilution()), vac12_mixture_stats(0.3, 0.6)};
  for (const auto &s : sources) o.close(engine_v(symmetric(0.0), s), 0.0, 1e-12, "V(0)");
  const auto thermal = InputEnsemble::symmetric(thermal_stats(), 3);
  const double first = coincidence_id_general(symmetric(0.0), thermal).p_normalized();
  for (double phi : linspace(0.0, 2 * pi, 401)) {
    o.close(coincidence_id_general(symmetric(phi), thermal).p_normalized(), first, 1e-12, "thermal p_id");
  }
  for (const auto &s : sources) {
    const auto ens = InputEnsemble::symmetric(s, 3);
    o.close(coincidence_id_general(symmetric(2 * pi / 3), ens).p_raw, coincidence_id_general(dft(3), ens).p_raw,
            1e-12, "sym(2pi/3) p_id");
    o.close(coincidence_dist_general(symmetric(2 * pi / 3), ens).p_raw,
            coincidence_dist_general(dft(3), ens).p_raw, 1e-12, "sym(2pi/3) p_dist");
  }
}

void ac7(Outcome &o) {
  const OptimumReport r = maximize_classical(pi / 2);
  o.within(r.value, 0.565, 0.569, "V*(pi/2)");
  o.within(r.argmax, 1.35, 1.43, "g2*(pi/2)");
  o.close(fock_visibility(pi / 2, 10000), 0.560, 2e-3, "Fock n=1e4 at pi/2");
  CrossoverOptions options;
  options.noise_g2 = maximize_classical(0.471 * pi).argmax;
  o.within(*options.noise_g2, 1.12, 1.14, "fixed noise g2");
  const CrossoverReport c = crossover_window(0.46 * pi, 0.5 * pi, 41, options);
  o.expect(c.window_found, "window found");
  o.expect(c.window_lo <= 0.471 * pi && c.window_hi >= 0.471 * pi, "window contains 0.471 pi");
  o.within(c.max_fock_margin_in_window, 1e-15, 5e-3, "Fock margin");
  o.within(c.max_noise_margin_in_window, 1e-15, 5e-3, "noise margin");
  bool fock_at_least_three = true;
  for (const auto &row : c.rows) {
    if (row.both_exceed && row.fock_n < 3) fock_at_least_three = false;
  }
  o.expect(fock_at_least_three, "winning Fock inputs have n >= 3");
}

void ac8(Outcome &o) {
  std::vector<Circuit> circuits{dft(2), dft(3), beamsplitter(0.3)};
  for (int k = 0; k < 8; ++k) circuits.push_back(symmetric(pi * (0.1 + k) / 4));
  struct Source {
    SourceStats stats;
    std::vector<oracle::MixtureComponent> mixture;
  };
  std::vector<Source> sources{{fock_stats(1), oracle::fock_mixture(1)}, {fock_stats(2), oracle::fock_mixture(2)}};
  for (double p : {0.0, 0.3, 0.6}) {
    for (double q : {0.0, 0.5, 1.0}) sources.push_back({vac12_mixture_stats(p, q), oracle::vac12_mixture(p, q)});
  }
  for (const auto &c : circuits) {
    for (const auto &s : sources) {
      const auto ens = InputEnsemble::symmetric(s.stats, c.ports());
      const auto id = oracle::oracle_coincidence(c, oracle::make_inputs(s.mixture, oracle::same_label(c.ports())));
      const auto dist =
          oracle::oracle_coincidence(c, oracle::make_inputs(s.mixture, oracle::distinct_labels(c.ports())));
      o.close(coincidence_id_general(c, ens).p_raw, id.p_raw, 1e-10, c.describe() + " id");
      o.close(coincidence_dist_general(c, ens).p_raw, dist.p_raw, 1e-10, c.describe() + " dist");
    }
  }
}

void ac9(Outcome &o) {
  std::mt19937_64 rng(20240509);
  for (int k = 0; k < 500; ++k) {
    const ComplexMatrix m = random_disk_matrix(1 + k % 8, rng);
    const Complex fast = permanent(m);
    const Complex slow = permanent_naive(m);
    const std::string what = "matrix " + std::to_string(k);
    o.close(fast.real(), slow.real(), 1e-10, what + " re");
    o.close(fast.imag(), slow.imag(), 1e-10, what + " im");
  }
  ComplexMatrix ones(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) ones(i, j) = 1.0;
  }
  o.close(permanent(ones).real(), 720.0, 1e-12, "Per(ones 6x6)");
  o.close(permanent(ones).imag(), 0.0, 1e-12, "Per(ones 6x6) im");
}

std::vector<std::vector<std::string>> csv_rows(const std::string &text, std::vector<std::string> &header) {
  auto split = [](const std::string &line) {
    std::vector<std::string> f(1);
    bool quoted = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        f.emplace_back();
      } else {
        f.back() += c;
      }
    }
    return f;
  };
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  header = split(line);
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) rows.push_back(split(line));
  return rows;
}

void check_table(Outcome &o, const std::string &name, const std::string &text, const std::string &id_col) {
  std::vector<std::string> header;
  const auto rows = csv_rows(text, header);
  auto col = [&](const std::string &key) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), key) - header.begin());
  };
  const std::size_t i_id = col(id_col), i_dist = col("p_dist"), i_v = col("v");
  o.expect(i_id < header.size() && i_dist < header.size() && i_v < header.size(), name + " columns");
  o.expect(!rows.empty(), name + " has rows");
  if (!o.pass()) return;
  for (const auto &r : rows) {
    o.expect(r.size() == header.size(), name + " row width");
    if (r.size() != header.size()) continue;
    const double dist = std::stod(r[i_dist]);
    if (dist > kVisibilityEpsilon) o.close(std::stod(r[i_v]), 1.0 - std::stod(r[i_id]) / dist, 1e-12, name + " v");
  }
}

void ac10(Outcome &o) {
  auto timed_run = [&](const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const auto start = std::chrono::steady_clock::now();
    const int code = cli::run(args, out, err);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(code == cli::kExitOk, args[0] + " exit code: " + err.str());
    o.within(seconds, 0.0, 10.0, args[0] + " runtime");
    return out.str();
  };
  check_table(o, "dft-vis", timed_run({"dft-vis"}), "p_id");
  check_table(o, "mismatch", timed_run({"mismatch"}), "p_xi");
  check_table(o, "sym", timed_run({"sym", "--raw"}), "p_id");
  const auto j = nlohmann::json::parse(
      timed_run({"optimize", "--phi-grid", "0.05pi:1.95pi:39", "--crossover", "0.46pi:0.5pi:41"}));
  for (const auto &opt : j.at("optima")) {
    const double phi = opt.at("phi").get<double>();
    const double g2 = opt.at("g2_opt").get<double>();
    const double g3 = opt.at("g3_opt").get<double>();
    const double v = 1.0 - coincidence_sym_phase(phi, g2, g3, kId) / coincidence_sym_phase(phi, g2, g3, kDist);
    o.close(opt.at("v_opt").get<double>(), v, 1e-12, "optimize v_opt");
    o.close(g3, g2 * g2, 1e-12, "optimize classical g3");
    const double vl = 1.0 - coincidence_sym_phase(phi, 1, 1, kId) / coincidence_sym_phase(phi, 1, 1, kDist);
    o.close(opt.at("v_laser").get<double>(), vl, 1e-12, "optimize v_laser");
  }
  for (const auto &row : j.at("crossover").at("rows")) {
    o.close(row.at("fock_margin").get<double>(),
            row.at("v_fock").get<double>() - row.at("v_laser").get<double>(), 1e-12, "crossover fock margin");
    o.close(row.at("noise_margin").get<double>(),
            row.at("v_noise").get<double>() - row.at("v_laser").get<double>(), 1e-12, "crossover noise margin");
  }
}

struct Criterion {
  const char *id;
  const char *title;
  double budget_seconds;
  std::function<void(Outcome &)> body;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "two-port closed form and engine agreement", 1.0, ac1},
      {"AC2", "three-port DFT anchors", 1.0, ac2},
      {"AC3", "classical optimum at 2pi/3", 1.0, ac3},
      {"AC4", "Gaussian bound curve", 0.0, ac4},
      {"AC5", "mode-mismatch path", 0.0, ac5},
      {"AC6", "symmetric circuit phase", 0.0, ac6},
      {"AC7", "crossover near 0.471 pi", 0.0, ac7},
      {"AC8", "oracle equivalence matrix", 30.0, ac8},
      {"AC9", "permanent correctness", 10.0, ac9},
      {"AC10", "figure data emission", 0.0, ac10},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception &e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0) o.within(seconds, 0.0, c.budget_seconds, "runtime seconds");
    if (!o.pass()) ++failed;
    std::printf("[%s] %s %s (%.3f s) %s\n", o.pass() ? "PASS" : "FAIL", c.id, c.title, seconds,
                o.summary().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
