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

#include "photstat/cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "photstat/circuits.hpp"
#include "photstat/coincidence.hpp"
#include "photstat/errors.hpp"
#include "photstat/optimize.hpp"
#include "photstat/visibility.hpp"
#include "photstat/cli/verify.hpp"

namespace photstat::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string csv_field(const Cell &cell) {
  return std::visit(overloaded{
                        [](std::monostate) { return std::string(); },
                        [](double v) { return format_number(v); },
                        [](long long v) { return std::to_string(v); },
                        [](const std::string &s) {
                          if (s.find_first_of(",\"\n") == std::string::npos) return s;
                          std::string quoted = "\"";
                          for (char c : s) {
                            if (c == '"') quoted += '"';
                            quoted += c;
                          }
                          return quoted + "\"";
                        },
                    },
                    cell);
}

nlohmann::json json_value(const Cell &cell) {
  return std::visit(overloaded{
                        [](std::monostate) { return nlohmann::json(nullptr); },
                        [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); },
                        [](long long v) { return nlohmann::json(v); },
                        [](const std::string &s) { return nlohmann::json(s); },
                    },
                    cell);
}

void emit(const Table &table, const RunConfig &config, std::ostream &out) {
  if (config.format == OutputFormat::kJson) {
    out << table.to_json().dump(2) << '\n';
  } else {
    table.write_csv(out);
  }
}

std::vector<LabeledSource> labeled(const std::vector<SourceSpec> &specs,
                                   std::vector<LabeledSource> fallback) {
  if (specs.empty()) return fallback;
  std::vector<LabeledSource> out;
  for (const auto &s : specs) out.push_back({to_string(s), to_stats(s)});
  return out;
}

void append_scan(Table &table, const ScanResult &scan, bool raw) {
  for (const auto &r : scan.rows) {
    std::vector<Cell> row{scan.source, r.param};
    if (raw) {
      row.push_back(r.p_id);
      row.push_back(r.p_dist);
    }
    row.push_back(r.v);
    table.add_row(std::move(row));
  }
}

// ---- hom ----

Table run_hom(const RunConfig &c) {
  const double r0 = c.reflectance.value_or(0.5);
  std::optional<double> g2 = c.g2;
  if (!c.sources.empty()) {
    if (c.sources.size() != 1) throw UsageError("hom: expected a single --source");
    g2 = to_stats(c.sources.front()).g(2);
  }

  Table table({"param", "g2", "p_id", "p_dist", "v"});
  auto add = [&](double param, double r, double g) {
    const InterferenceWeights w(beamsplitter(r));
    const double gs[] = {1.0, 1.0, g};
    const VisibilityPoint p =
        visibility(w.evaluate_symmetric(gs, Distinguishability::kIndistinguishable),
                   w.evaluate_symmetric(gs, Distinguishability::kDistinguishable));
    table.add_row({param, g, p.p_id, p.p_dist, p.v});
  };

  if (c.grid && c.scan_axis == "g2") {
    if (g2) throw UsageError("hom: --scan-g2 cannot be combined with --g2 or --source");
    for (double g : c.grid->values()) add(g, r0, g);
    return table;
  }
  if (!g2) throw UsageError("hom: one of --g2, --source or --scan-g2 is required");
  if (c.grid && c.scan_axis == "R") {
    if (c.reflectance) throw UsageError("hom: --scan-R cannot be combined with --R");
    for (double r : c.grid->values()) add(r, r, *g2);
    return table;
  }
  if (c.grid) throw UsageError("hom: scan_axis must be g2 or R");
  add(r0, r0, *g2);
  return table;
}

// ---- dft-vis ----

Table run_dft_vis(const RunConfig &c) {
  const GridSpec grid = c.grid.value_or(GridSpec{0.0, 6.0, 601});
  const auto points = labeled(c.sources, dft_reference_sources());
  const auto scans = scan_g2_dft(grid.start, grid.stop, grid.count, points);

  Table table({"series", "g2", "g3", "p_id", "p_dist", "v"});
  for (std::size_t k = 0; k < scans.size(); ++k) {
    const auto &scan = scans[k];
    for (const auto &r : scan.rows) {
      Cell g3;
      if (scan.source == "classical_bound") {
        g3 = r.param * r.param;
      } else if (scan.source == "gaussian_bound") {
        const double f = 2.0 - 3.0 * std::sqrt(r.param);
        g3 = f * f;
      } else if (k >= 3) {
        g3 = points[k - 3].stats.g(3);
      }
      table.add_row({scan.source, r.param, g3, r.p_id, r.p_dist, r.v});
    }
  }

  const OptimumReport best = maximize_classical(2.0 * std::numbers::pi / 3.0);
  const double g2 = best.argmax;
  const double g3 = g2 * g2;
  const double p_id = g3 / 9.0 + 1.0 / 3.0;
  const double p_dist = g3 / 9.0 + 2.0 * g2 / 3.0 + 2.0 / 9.0;
  table.add_row({std::string("classical_bound_max"), g2, g3, p_id, p_dist, visibility(p_id, p_dist).v});
  return table;
}

// ---- mismatch / sym ----

Table run_mismatch(const RunConfig &c) {
  const auto sources = labeled(c.sources, comparison_sources());
  const auto grid = c.grid.value_or(GridSpec{0.0, 2.0, 201}).values();
  Table table({"source", "xi", "p_xi", "p_dist", "v"});
  for (const auto &scan : scan_overlap(sources, grid)) append_scan(table, scan, true);
  return table;
}

Table run_sym(const RunConfig &c) {
  const auto sources = labeled(c.sources, comparison_sources());
  const auto grid = c.grid.value_or(GridSpec{0.0, 2.0 * std::numbers::pi, 401}).values();
  std::vector<std::string> columns{"source", "phi"};
  if (c.raw) {
    columns.push_back("p_id");
    columns.push_back("p_dist");
  }
  columns.push_back("v");
  Table table(std::move(columns));
  for (const auto &scan : scan_phase(sources, grid)) append_scan(table, scan, c.raw);
  return table;
}

// ---- optimize ----

nlohmann::json optimum_json(double phi, long long fock_n_max) {
  const OptimumReport opt = maximize_classical(phi);
  const FockReport fock = best_fock(phi, fock_n_max);
  return {
      {"phi", opt.phi},
      {"g2_opt", opt.argmax},
      {"g3_opt", opt.argmax * opt.argmax},
      {"v_opt", opt.value},
      {"iterations", opt.iterations},
      {"bracket", {opt.bracket_lo, opt.bracket_hi}},
      {"at_boundary", opt.at_boundary},
      {"v_laser", classical_visibility(phi, 1.0)},
      {"fock",
       {{"n_max", fock_n_max},
        {"n_max_v", fock.n_max_v},
        {"v_max", fock.v_max},
        {"n_min_v", fock.n_min_v},
        {"v_min", fock.v_min},
        {"n_max_abs", fock.n_max_abs},
        {"v_max_abs", fock.v_max_abs}}},
  };
}

nlohmann::json crossover_json(const GridSpec &grid, const CrossoverOptions &options) {
  const CrossoverReport report = crossover_window(grid.start, grid.stop, grid.count, options);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &r : report.rows) {
    rows.push_back({{"phi", r.phi},
                    {"v_laser", r.v_laser},
                    {"fock_n", r.fock_n},
                    {"v_fock", r.v_fock},
                    {"fock_margin", r.fock_margin},
                    {"noise_g2", r.noise_g2},
                    {"v_noise", r.v_noise},
                    {"noise_margin", r.noise_margin},
                    {"both_exceed", r.both_exceed}});
  }
  nlohmann::json j{{"phi_lo", grid.start},
                   {"phi_hi", grid.stop},
                   {"count", grid.count},
                   {"fock_n_min", options.fock_n_min},
                   {"fock_n_max", options.fock_n_max},
                   {"noise_g2", options.noise_g2 ? nlohmann::json(*options.noise_g2) : nlohmann::json(nullptr)},
                   {"window_found", report.window_found}};
  if (report.window_found) {
    j["window_lo"] = report.window_lo;
    j["window_hi"] = report.window_hi;
    j["max_fock_margin"] = report.max_fock_margin_in_window;
    j["max_noise_margin"] = report.max_noise_margin_in_window;
  }
  j["rows"] = std::move(rows);
  return j;
}

nlohmann::json run_optimize(const RunConfig &c) {
  if (c.phi && c.grid) throw UsageError("optimize: --phi and --phi-grid are mutually exclusive");
  if (c.fock_n_max < 1) throw UsageError("optimize: --fock-nmax must be positive");
  std::vector<double> phis;
  if (c.grid) {
    phis = c.grid->values();
  } else if (c.phi || !c.crossover) {
    phis.push_back(c.phi.value_or(2.0 * std::numbers::pi / 3.0));
  }
  nlohmann::json optima = nlohmann::json::array();
  for (double phi : phis) optima.push_back(optimum_json(phi, c.fock_n_max));
  nlohmann::json j{{"optima", std::move(optima)}};
  if (c.crossover) {
    CrossoverOptions options;
    options.fock_n_max = c.fock_n_max;
    options.noise_g2 = c.noise_g2;
    j["crossover"] = crossover_json(*c.crossover, options);
  }
  return j;
}

// ---- eval ----

Circuit eval_circuit(const RunConfig &c) {
  const int chosen = int(c.circuit_path.has_value()) + int(c.dft_ports.has_value()) +
                     int(c.phi.has_value()) + int(c.reflectance.has_value());
  if (chosen != 1) throw UsageError("eval: give exactly one of --circuit, --dft, --sym, --bs");
  if (c.circuit_path) return load_circuit_file(*c.circuit_path);
  if (c.dft_ports) return dft(*c.dft_ports);
  if (c.phi) return symmetric(*c.phi);
  return beamsplitter(*c.reflectance);
}

Table run_eval(const RunConfig &c) {
  const Circuit circuit = eval_circuit(c);
  const int n = circuit.ports();
  if (n > kMaxEnginePorts) {
    throw UsageError("eval: at most " + std::to_string(kMaxEnginePorts) + " ports are supported");
  }
  std::vector<SourceStats> ports;
  if (c.sources.size() == 1) {
    ports.assign(static_cast<std::size_t>(n), to_stats(c.sources.front()));
  } else if (c.sources.size() == static_cast<std::size_t>(n)) {
    for (const auto &s : c.sources) ports.push_back(to_stats(s));
  } else {
    throw UsageError("eval: give one --source, or one per port (" + std::to_string(n) + ")");
  }
  const InputEnsemble inputs(std::move(ports));
  const InterferenceWeights w(circuit);
  const CoincidenceResult id = w.evaluate(inputs, Distinguishability::kIndistinguishable);
  const CoincidenceResult dist = w.evaluate(inputs, Distinguishability::kDistinguishable);
  const VisibilityPoint p = visibility(id.p_normalized(), dist.p_normalized());

  Table table({"circuit", "ports", "p_id_raw", "p_dist_raw", "intensity_product", "p_id", "p_dist", "v"});
  table.add_row({circuit.describe(), static_cast<long long>(n), id.p_raw, dist.p_raw,
                 id.intensity_product, p.p_id, p.p_dist, p.v});
  return table;
}

// ---- verify ----

int run_verify(const RunConfig &c, std::ostream &out) {
  const VerifyReport report = run_verification(c.seed);
  if (c.format == OutputFormat::kJson) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto &r : report.checks) {
      checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    out << nlohmann::json{{"seed", c.seed}, {"all_pass", report.all_pass()}, {"checks", checks}}.dump(2)
        << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto &r : report.checks) {
      out << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << r.detail << "]\n";
      passed += r.pass ? 1 : 0;
    }
    out << passed << "/" << report.checks.size() << " checks passed (seed " << c.seed << ")\n";
  }
  return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

// ---- argument parsing ----

/// Raw flag text, converted after CLI11 has finished so that number and
/// grid syntax errors surface as UsageError.
struct Flags {
  std::string reflectance, g2, phi, noise_g2, phi_grid, scan_g2, scan_r, grid, crossover;
  int dft_ports = 0;
  std::string circuit;
  std::vector<std::string> sources;
  long long fock_n_max = 10000;
  bool raw = false;
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "csv";
  std::string config_path;
  bool dump_config = false;
};

std::optional<double> number_flag(const std::string &text) {
  if (text.empty()) return std::nullopt;
  return parse_number(text);
}

std::optional<GridSpec> grid_flag(const std::string &text) {
  if (text.empty()) return std::nullopt;
  return parse_grid(text);
}

RunConfig build_config(const std::string &command, const Flags &f) {
  RunConfig c;
  c.command = command;
  c.reflectance = number_flag(f.reflectance);
  c.g2 = number_flag(f.g2);
  c.phi = number_flag(f.phi);
  c.noise_g2 = number_flag(f.noise_g2);
  if (f.dft_ports != 0) c.dft_ports = f.dft_ports;
  if (!f.circuit.empty()) c.circuit_path = f.circuit;
  for (const auto &s : f.sources) c.sources.push_back(parse_source_spec(s));
  c.crossover = grid_flag(f.crossover);
  c.fock_n_max = f.fock_n_max;
  c.raw = f.raw;
  c.seed = f.seed;
  c.output = f.output;
  c.format = f.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;

  if (!f.scan_g2.empty() && !f.scan_r.empty()) {
    throw UsageError("hom: --scan-g2 and --scan-R are mutually exclusive");
  }
  if (!f.scan_g2.empty()) {
    c.grid = parse_grid(f.scan_g2);
    c.scan_axis = "g2";
  } else if (!f.scan_r.empty()) {
    c.grid = parse_grid(f.scan_r);
    c.scan_axis = "R";
  } else if (!f.phi_grid.empty()) {
    c.grid = parse_grid(f.phi_grid);
  } else if (!f.grid.empty()) {
    c.grid = parse_grid(f.grid);
  }
  return c;
}

void add_output_flags(CLI::App *sub, Flags &f) {
  sub->add_option("-o,--output", f.output, "Write results to this file instead of stdout");
  sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_flag("--dump-config", f.dump_config, "Print the resolved configuration as JSON and exit");
}

std::ostream &open_output(const RunConfig &c, std::ostream &out, std::ofstream &file) {
  if (c.output.empty()) return out;
  file.open(c.output);
  if (!file) throw UsageError("cannot open output file '" + c.output + "'");
  return file;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw DimensionError("table row has " + std::to_string(row.size()) + " cells, expected " +
                         std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(row));
}

void Table::write_csv(std::ostream &out) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
  out << '\n';
  for (const auto &row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  }
}

nlohmann::json Table::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &row : rows_) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = json_value(row[i]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

int execute(const RunConfig &c, std::ostream &out, std::ostream &err) {
  (void)err;
  std::ofstream file;
  std::ostream &sink = open_output(c, out, file);
  if (c.command == "verify") return run_verify(c, sink);
  if (c.command == "optimize") {
    sink << run_optimize(c).dump(2) << '\n';
    return kExitOk;
  }
  Table table = [&] {
    if (c.command == "hom") return run_hom(c);
    if (c.command == "dft-vis") return run_dft_vis(c);
    if (c.command == "mismatch") return run_mismatch(c);
    if (c.command == "sym") return run_sym(c);
    if (c.command == "eval") return run_eval(c);
    throw UsageError("unknown command '" + c.command + "'");
  }();
  emit(table, c, sink);
  return kExitOk;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Multiphoton interference visibilities for arbitrary photon statistics", "photstat"};
  app.require_subcommand(1);
  Flags f;

  auto *hom = app.add_subcommand("hom", "Two-port beamsplitter coincidences and visibility");
  hom->add_option("-R,--R", f.reflectance, "Reflectance (default 0.5)");
  auto *hom_g2 = hom->add_option("--g2", f.g2, "Second-order correlation of both inputs");
  auto *hom_src = hom->add_option("--source", f.sources, "Input source spec")->expected(1);
  hom_g2->excludes(hom_src);
  hom->add_option("--scan-g2", f.scan_g2, "Scan g2 over start:stop:count");
  hom->add_option("--scan-R", f.scan_r, "Scan R over start:stop:count");
  add_output_flags(hom, f);

  auto *dftv = app.add_subcommand("dft-vis", "Three-port DFT visibility over g2 with bound curves");
  dftv->add_option("--scan-g2,--grid", f.grid, "g2 axis start:stop:count (default 0:6:601)");
  dftv->add_option("--source", f.sources, "Point sources (default: reference set)");
  add_output_flags(dftv, f);

  auto *mis = app.add_subcommand("mismatch", "DFT visibility along the sequential mode-overlap path");
  mis->add_option("--grid", f.grid, "xi axis start:stop:count (default 0:2:201)");
  mis->add_option("--source", f.sources, "Sources (default: comparison set)");
  add_output_flags(mis, f);

  auto *sym = app.add_subcommand("sym", "Symmetric three-port circuit visibility over phase");
  sym->add_option("--grid", f.grid, "phi axis start:stop:count (default 0:2pi:401)");
  sym->add_option("--source", f.sources, "Sources (default: comparison set)");
  sym->add_flag("--raw", f.raw, "Include p_id and p_dist columns");
  add_output_flags(sym, f);

  auto *opt = app.add_subcommand("optimize", "Best classical noise and Fock inputs for symmetric(phi)");
  auto *opt_phi = opt->add_option("--phi", f.phi, "Phase (default 2pi/3)");
  opt->add_option("--phi-grid", f.phi_grid, "Phases start:stop:count")->excludes(opt_phi);
  opt->add_option("--crossover", f.crossover, "Crossover scan start:stop:count");
  opt->add_option("--noise-g2", f.noise_g2, "Fixed noise g2 for the crossover scan");
  opt->add_option("--fock-nmax", f.fock_n_max, "Largest Fock photon number searched");
  add_output_flags(opt, f);

  auto *ver = app.add_subcommand("verify", "Cross-check engines against oracle and closed forms");
  ver->add_option("--seed", f.seed, "RNG seed");
  add_output_flags(ver, f);

  auto *ev = app.add_subcommand("eval", "Coincidences for one circuit and per-port sources");
  auto *ev_file = ev->add_option("--circuit", f.circuit, "Circuit JSON file");
  auto *ev_dft = ev->add_option("--dft", f.dft_ports, "DFT circuit with this many ports");
  auto *ev_sym = ev->add_option("--sym", f.phi, "Symmetric three-port circuit at this phase");
  auto *ev_bs = ev->add_option("--bs", f.reflectance, "Beamsplitter with this reflectance");
  ev_file->excludes(ev_dft)->excludes(ev_sym)->excludes(ev_bs);
  ev_dft->excludes(ev_sym)->excludes(ev_bs);
  ev_sym->excludes(ev_bs);
  ev->add_option("--source", f.sources, "One source spec, or one per port")->required();
  add_output_flags(ev, f);

  auto *rerun = app.add_subcommand("run", "Run a saved configuration");
  rerun->add_option("--config", f.config_path, "Configuration JSON file")->required()->check(CLI::ExistingFile);
  rerun->add_flag("--dump-config", f.dump_config, "Print the configuration and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig config;
    if (rerun->parsed()) {
      std::ifstream in(f.config_path);
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception &e) {
        throw UsageError("config file '" + f.config_path + "': " + e.what());
      }
      config = run_config_from_json(j);
    } else {
      config = build_config(app.get_subcommands().front()->get_name(), f);
    }
    if (f.dump_config) {
      out << to_json(config).dump(2) << '\n';
      return kExitOk;
    }
    return execute(config, out, err);
  } catch (const std::exception &e) {
    err << "photstat: error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  std::vector<const char *> argv{"photstat"};
  for (const auto &a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace photstat::cli
