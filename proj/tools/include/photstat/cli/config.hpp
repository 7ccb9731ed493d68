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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "photstat/circuits.hpp"
#include "photstat/sources.hpp"

namespace photstat::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Thrown for malformed flag values; maps to kExitUsage.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FockSpec {
  int photons;
  bool operator==(const FockSpec &) const = default;
};
struct LaserSpec {
  bool operator==(const LaserSpec &) const = default;
};
struct ThermalSpec {
  bool operator==(const ThermalSpec &) const = default;
};
struct DilutedSpec {
  double p;
  bool operator==(const DilutedSpec &) const = default;
};
struct Vac12Spec {
  double p;
  double q;
  bool operator==(const Vac12Spec &) const = default;
};
struct CustomSpec {
  double g2;
  double g3;
  bool operator==(const CustomSpec &) const = default;
};

/// Source spec strings: fock:<n>, laser, thermal, diluted:<p>,
/// vac12:<p>,<q>, custom:g2=<x>,g3=<y>. `optimal-noise` is shorthand for
/// the DFT-optimal diluted laser.
using SourceSpec = std::variant<FockSpec, LaserSpec, ThermalSpec, DilutedSpec, Vac12Spec, CustomSpec>;

SourceSpec parse_source_spec(std::string_view text);
std::string to_string(const SourceSpec &spec);
SourceStats to_stats(const SourceSpec &spec, int max_order = kDefaultMaxOrder);

/// Inclusive grid `start:stop:count`.
struct GridSpec {
  double start;
  double stop;
  int count;

  std::vector<double> values() const;
  bool operator==(const GridSpec &) const = default;
};

GridSpec parse_grid(std::string_view text);
std::string to_string(const GridSpec &grid);

/// Plain decimal, or a multiple of pi with an optional divisor:
/// "1.5", "pi", "2pi/3", "0.471pi", "-pi/2".
double parse_number(std::string_view text);

/// 17 significant digits, shortest form; round-trips exactly.
std::string format_number(double value);

/// {"n": N, "re": [[...]], "im": [[...]]}, row-major.
ComplexMatrix circuit_matrix_from_json(const nlohmann::json &j);
nlohmann::json circuit_matrix_to_json(const ComplexMatrix &u);
/// Reads a circuit file and validates unitarity (custom tolerance).
Circuit load_circuit_file(const std::string &path);

enum class OutputFormat { kCsv, kJson };

/// Everything a single invocation needs. Serializes to JSON so runs can be
/// saved and replayed with `photstat run --config <file>`.
struct RunConfig {
  std::string command;
  std::optional<double> reflectance;
  std::optional<double> g2;
  std::optional<double> phi;
  std::optional<int> dft_ports;
  std::optional<std::string> circuit_path;
  std::vector<SourceSpec> sources;
  /// Scan axis values; the axis is implied by the command, except for hom
  /// where scan_axis selects "g2" or "R".
  std::optional<GridSpec> grid;
  std::string scan_axis;
  std::optional<GridSpec> crossover;
  std::optional<double> noise_g2;
  long long fock_n_max = 10000;
  bool raw = false;
  std::uint64_t seed = 1;
  std::string output;
  OutputFormat format = OutputFormat::kCsv;

  bool operator==(const RunConfig &) const = default;
};

nlohmann::json to_json(const RunConfig &config);
RunConfig run_config_from_json(const nlohmann::json &j);

}  // namespace photstat::cli
