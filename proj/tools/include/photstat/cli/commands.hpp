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

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "photstat/cli/config.hpp"

namespace photstat::cli {

/// Empty cells print as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, double, long long, std::string>;

/// Rectangular result set with named columns.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  /// Throws DimensionError if the row width differs from the column count.
  void add_row(std::vector<Cell> row);

  const std::vector<std::string> &columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>> &rows() const noexcept { return rows_; }

  /// Single header row; fields holding ',' or '"' are quoted.
  void write_csv(std::ostream &out) const;
  /// Array of objects keyed by column name.
  nlohmann::json to_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Parses argv, runs one subcommand and returns the process exit code.
/// Help goes to `out`; diagnostics go to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Runs a complete configuration. Output goes to config.output when set,
/// otherwise to `out`. Throws UsageError and core errors on bad input.
int execute(const RunConfig &config, std::ostream &out, std::ostream &err);

}  // namespace photstat::cli
