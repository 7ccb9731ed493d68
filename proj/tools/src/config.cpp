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

#include "photstat/cli/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "photstat/errors.hpp"
#include "photstat/optimize.hpp"

namespace photstat::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_plain(std::string_view text, std::string_view context) {
  double value = 0.0;
  const auto *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw UsageError("invalid number '" + std::string(text) + "' in " + std::string(context));
  }
  return value;
}

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  text = trim(text);
  const auto *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError("invalid integer '" + std::string(text) + "' in " + std::string(context));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                  : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_keyed(std::string_view part, std::string_view key, std::string_view context) {
  part = trim(part);
  if (part.size() <= key.size() + 1 || part.substr(0, key.size()) != key ||
      part[key.size()] != '=') {
    throw UsageError("expected " + std::string(key) + "=<value> in " + std::string(context));
  }
  return parse_number(part.substr(key.size() + 1));
}

}  // namespace

double parse_number(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw UsageError("empty number");
  double divisor = 1.0;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    divisor = parse_plain(trim(s.substr(slash + 1)), text);
    if (divisor == 0.0) throw UsageError("division by zero in '" + std::string(text) + "'");
    s = trim(s.substr(0, slash));
  }
  double scale = 1.0;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    scale = std::numbers::pi;
    s.remove_suffix(2);
    s = trim(s);
    if (s.empty() || s == "+") {
      s = "1";
    } else if (s == "-") {
      s = "-1";
    }
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return parse_plain(s, text) * scale / divisor;
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

SourceSpec parse_source_spec(std::string_view text) {
  const std::string_view s = trim(text);
  const auto colon = s.find(':');
  const std::string_view family = s.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
  const std::string ctx = "source spec '" + std::string(s) + "'";
  auto no_args = [&] {
    if (colon != std::string_view::npos) throw UsageError(ctx + " takes no arguments");
  };
  if (family == "laser") {
    no_args();
    return LaserSpec{};
  }
  if (family == "thermal") {
    no_args();
    return ThermalSpec{};
  }
  if (family == "optimal-noise") {
    no_args();
    return DilutedSpec{optimal_dilution()};
  }
  if (colon == std::string_view::npos) throw UsageError("unknown or incomplete " + ctx);
  if (family == "fock") {
    return FockSpec{parse_int(args, ctx)};
  }
  if (family == "diluted") {
    return DilutedSpec{parse_number(args)};
  }
  if (family == "vac12") {
    const auto parts = split(args, ',');
    if (parts.size() != 2) throw UsageError(ctx + ": expected vac12:<p>,<q>");
    return Vac12Spec{parse_number(parts[0]), parse_number(parts[1])};
  }
  if (family == "custom") {
    const auto parts = split(args, ',');
    if (parts.size() != 2) throw UsageError(ctx + ": expected custom:g2=<x>,g3=<y>");
    return CustomSpec{parse_keyed(parts[0], "g2", ctx), parse_keyed(parts[1], "g3", ctx)};
  }
  throw UsageError("unknown " + ctx);
}

std::string to_string(const SourceSpec &spec) {
  return std::visit(
      overloaded{
          [](const FockSpec &f) { return "fock:" + std::to_string(f.photons); },
          [](const LaserSpec &) { return std::string("laser"); },
          [](const ThermalSpec &) { return std::string("thermal"); },
          [](const DilutedSpec &d) { return "diluted:" + format_number(d.p); },
          [](const Vac12Spec &v) {
            return "vac12:" + format_number(v.p) + "," + format_number(v.q);
          },
          [](const CustomSpec &c) {
            return "custom:g2=" + format_number(c.g2) + ",g3=" + format_number(c.g3);
          },
      },
      spec);
}

SourceStats to_stats(const SourceSpec &spec, int max_order) {
  return std::visit(overloaded{
                        [&](const FockSpec &f) { return fock_stats(f.photons, max_order); },
                        [&](const LaserSpec &) { return laser_stats(max_order); },
                        [&](const ThermalSpec &) { return thermal_stats(max_order); },
                        [&](const DilutedSpec &d) { return diluted_laser_stats(d.p, max_order); },
                        [&](const Vac12Spec &v) { return vac12_mixture_stats(v.p, v.q, max_order); },
                        [](const CustomSpec &c) { return custom_stats(c.g2, c.g3); },
                    },
                    spec);
}

std::vector<double> GridSpec::values() const { return linspace(start, stop, count); }

GridSpec parse_grid(std::string_view text) {
  const auto parts = split(trim(text), ':');
  if (parts.size() != 3) {
    throw UsageError("grid '" + std::string(text) + "' must have the form start:stop:count");
  }
  GridSpec g{parse_number(parts[0]), parse_number(parts[1]), parse_int(parts[2], text)};
  if (g.count < 1) throw UsageError("grid count must be at least 1");
  if (g.count > 1 && !(g.stop > g.start)) {
    throw UsageError("grid '" + std::string(text) + "' must have stop > start");
  }
  return g;
}

std::string to_string(const GridSpec &grid) {
  return format_number(grid.start) + ":" + format_number(grid.stop) + ":" +
         std::to_string(grid.count);
}

ComplexMatrix circuit_matrix_from_json(const nlohmann::json &j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 1) throw UsageError("circuit: n must be positive");
    const auto &re = j.at("re");
    const auto &im = j.at("im");
    const auto size = static_cast<std::size_t>(n);
    if (re.size() != size || im.size() != size) {
      throw UsageError("circuit: re and im must each have n rows");
    }
    std::vector<Complex> entries;
    entries.reserve(size * size);
    for (std::size_t r = 0; r < size; ++r) {
      if (re[r].size() != size || im[r].size() != size) {
        throw UsageError("circuit: every row must have n entries");
      }
      for (std::size_t c = 0; c < size; ++c) {
        entries.emplace_back(re[r][c].get<double>(), im[r][c].get<double>());
      }
    }
    return ComplexMatrix(size, size, std::move(entries));
  } catch (const nlohmann::json::exception &e) {
    throw UsageError(std::string("circuit JSON: ") + e.what());
  }
}

nlohmann::json circuit_matrix_to_json(const ComplexMatrix &u) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (std::size_t r = 0; r < u.rows(); ++r) {
    nlohmann::json rr = nlohmann::json::array();
    nlohmann::json ri = nlohmann::json::array();
    for (std::size_t c = 0; c < u.cols(); ++c) {
      rr.push_back(u(r, c).real());
      ri.push_back(u(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return {{"n", u.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Circuit load_circuit_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open circuit file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw UsageError("circuit file '" + path + "': " + e.what());
  }
  return custom(circuit_matrix_from_json(j));
}

nlohmann::json to_json(const RunConfig &c) {
  nlohmann::json j;
  j["command"] = c.command;
  if (c.reflectance) j["reflectance"] = *c.reflectance;
  if (c.g2) j["g2"] = *c.g2;
  if (c.phi) j["phi"] = *c.phi;
  if (c.dft_ports) j["dft_ports"] = *c.dft_ports;
  if (c.circuit_path) j["circuit"] = *c.circuit_path;
  if (!c.sources.empty()) {
    nlohmann::json sources = nlohmann::json::array();
    for (const auto &s : c.sources) sources.push_back(to_string(s));
    j["sources"] = std::move(sources);
  }
  if (c.grid) j["grid"] = to_string(*c.grid);
  if (!c.scan_axis.empty()) j["scan_axis"] = c.scan_axis;
  if (c.crossover) j["crossover"] = to_string(*c.crossover);
  if (c.noise_g2) j["noise_g2"] = *c.noise_g2;
  j["fock_n_max"] = c.fock_n_max;
  j["raw"] = c.raw;
  j["seed"] = c.seed;
  if (!c.output.empty()) j["output"] = c.output;
  j["format"] = c.format == OutputFormat::kJson ? "json" : "csv";
  return j;
}

RunConfig run_config_from_json(const nlohmann::json &j) {
  try {
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    if (j.contains("reflectance")) c.reflectance = j["reflectance"].get<double>();
    if (j.contains("g2")) c.g2 = j["g2"].get<double>();
    if (j.contains("phi")) c.phi = j["phi"].get<double>();
    if (j.contains("dft_ports")) c.dft_ports = j["dft_ports"].get<int>();
    if (j.contains("circuit")) c.circuit_path = j["circuit"].get<std::string>();
    if (j.contains("sources")) {
      for (const auto &s : j["sources"]) c.sources.push_back(parse_source_spec(s.get<std::string>()));
    }
    if (j.contains("grid")) c.grid = parse_grid(j["grid"].get<std::string>());
    if (j.contains("scan_axis")) c.scan_axis = j["scan_axis"].get<std::string>();
    if (j.contains("crossover")) c.crossover = parse_grid(j["crossover"].get<std::string>());
    if (j.contains("noise_g2")) c.noise_g2 = j["noise_g2"].get<double>();
    if (j.contains("fock_n_max")) c.fock_n_max = j["fock_n_max"].get<long long>();
    if (j.contains("raw")) c.raw = j["raw"].get<bool>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("output")) c.output = j["output"].get<std::string>();
    if (j.contains("format")) {
      const auto f = j["format"].get<std::string>();
      if (f != "csv" && f != "json") throw UsageError("format must be csv or json");
      c.format = f == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
    }
    return c;
  } catch (const nlohmann::json::exception &e) {
    throw UsageError(std::string("config JSON: ") + e.what());
  }
}

}  // namespace photstat::cli
