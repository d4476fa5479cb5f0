/*
 * Copyright 2026 The Wiretap LP Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Experiment harness behind the command-line tool: one entry point per
// command, each writing CSV or JSON to a stream.
//
// CSV output starts with a `#schema=1` line, then a header row, then data.
// Floating-point values carry 12 significant digits. JSON output wraps the
// same data with run metadata; its `timestamp` field is the only part that
// varies between identical runs.

#ifndef WIRETAP_EXPERIMENT_H_
#define WIRETAP_EXPERIMENT_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wiretap/ni_code.h"

namespace wiretap {

inline constexpr int kCsvSchemaVersion = 1;

enum class Command { kLimit, kNi, kEquivocation, kMatrices, kCompare, kCounts };

Command ParseCommand(std::string_view name);
std::string CommandName(Command command);

enum class OutputFormat { kCsv, kJson };

OutputFormat ParseOutputFormat(std::string_view name);

// Closed uniform grid of `points` values from start to stop.
struct PGrid {
  double start = 0.0;
  double stop = 0.5;
  int points = 101;

  // Parses "start:stop:points". Throws UsageError unless
  // 0 <= start <= stop <= 1 and points >= 2.
  static PGrid Parse(std::string_view text);
  void Validate() const;
  std::vector<double> Values() const;
};

// Parses "l,k".
FormId ParseForm(std::string_view text);

struct ExperimentConfig {
  Command command = Command::kLimit;
  FormId form{1, 4};
  PGrid grid;
  // Evaluate a single crossover probability instead of the grid.
  std::optional<double> p;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kCsv;
  // User-supplied table for `equivocation`.
  std::optional<std::string> table_in;
  bool emit_matrices = false;
  bool closed_form = false;
  // Include a wall-clock timestamp in JSON metadata.
  bool timestamp = true;

  // Throws UsageError on inconsistent settings.
  void Validate() const;
  std::vector<double> Probabilities() const;
};

// Runs cfg.command, writing results to `out` and warnings to `diag`.
// Errors are thrown (see errors.h); findings such as a random code beating
// the Ni table are reported on `diag` and do not fail the run.
void RunExperiment(const ExperimentConfig& cfg, std::ostream& out,
                   std::ostream& diag);

void RunLimit(const ExperimentConfig& cfg, std::ostream& out);
void RunNi(const ExperimentConfig& cfg, std::ostream& out);
void RunEquivocation(const ExperimentConfig& cfg, std::ostream& out);
void RunMatrices(const ExperimentConfig& cfg, std::ostream& out);
void RunCompare(const ExperimentConfig& cfg, std::ostream& out,
                std::ostream& diag);
void RunCounts(const ExperimentConfig& cfg, std::ostream& out);

// Twelve significant digits, shortest of fixed/scientific.
std::string FormatNumber(double value);

struct CsvData {
  int schema = kCsvSchemaVersion;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  // Cell (row, column) as a double. Throws ParseError if not numeric.
  double Number(std::size_t row, std::size_t column) const;
  // Index of a named column; throws UsageError if absent.
  std::size_t Column(std::string_view name) const;
};

void WriteCsv(std::ostream& out, const CsvData& data);
// Throws ParseError on a missing schema line, an unknown schema version or
// ragged rows.
CsvData ParseCsv(std::istream& in);

}  // namespace wiretap

#endif  // WIRETAP_EXPERIMENT_H_
