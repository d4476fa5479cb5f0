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


#include "wiretap/experiment.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wiretap/baselines.h"
#include "wiretap/equivocation.h"
#include "wiretap/errors.h"
#include "wiretap/linear_matrices.h"
#include "wiretap/lp_limit.h"
#include "wiretap/table_io.h"

namespace wiretap {
namespace {

using Json = nlohmann::ordered_json;

double ParseDouble(std::string_view text, const std::string& what) {
  const std::string s(text);
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw UsageError("invalid " + what + " '" + s + "'");
  }
  return value;
}

int ParseInt(std::string_view text, const std::string& what) {
  const std::string s(text);
  if (s.empty() || s.size() > 9 ||
      s.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("invalid " + what + " '" + s + "'");
  }
  return std::stoi(s);
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  while (true) {
    const std::size_t pos = text.find(sep, begin);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(begin));
      return out;
    }
    out.push_back(text.substr(begin, pos - begin));
    begin = pos + 1;
  }
}

// Value as printed, so JSON and CSV carry the same digits.
double Rounded(double value) { return std::strtod(FormatNumber(value).c_str(), nullptr); }

std::string Timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

Json Metadata(const ExperimentConfig& cfg) {
  Json meta;
  meta["schema"] = kCsvSchemaVersion;
  meta["command"] = CommandName(cfg.command);
  meta["form"] = {{"l", cfg.form.l}, {"k", cfg.form.k}};
  if (cfg.p) {
    meta["p"] = *cfg.p;
  } else {
    meta["grid"] = {{"start", cfg.grid.start},
                    {"stop", cfg.grid.stop},
                    {"points", cfg.grid.points}};
  }
  if (cfg.command == Command::kCompare) {
    meta["seed"] = cfg.seed;
    meta["samples"] = cfg.samples;
    meta["rng"] = kSamplerAlgorithm;
  }
  if (cfg.table_in) meta["table_in"] = *cfg.table_in;
  meta["closed_form"] = cfg.closed_form;
  if (cfg.timestamp) meta["timestamp"] = Timestamp();
  return meta;
}

// Emits numeric rows as CSV or JSON.
void EmitTable(const ExperimentConfig& cfg, std::ostream& out,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
  if (cfg.format == OutputFormat::kCsv) {
    CsvData data;
    data.columns = columns;
    for (const auto& row : rows) {
      std::vector<std::string> cells;
      for (double v : row) cells.push_back(FormatNumber(v));
      data.rows.push_back(std::move(cells));
    }
    WriteCsv(out, data);
    return;
  }
  Json doc;
  doc["metadata"] = Metadata(cfg);
  doc["columns"] = columns;
  Json json_rows = Json::array();
  for (const auto& row : rows) {
    Json r = Json::array();
    for (double v : row) r.push_back(Rounded(v));
    json_rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(json_rows);
  out << doc.dump(2) << '\n';
}

CodeTable NiTable(const ExperimentConfig& cfg) {
  return cfg.closed_form ? ClosedFormTable(cfg.form) : StandardTable(cfg.form);
}

Json TableJson(const CodeTable& table) {
  Json bins = Json::array();
  for (const Bin& bin : table.bins()) {
    Json words = Json::array();
    for (const Codeword& w : bin) words.push_back(w.ToString());
    bins.push_back(std::move(words));
  }
  return {{"l", table.l()}, {"k", table.k()}, {"bins", std::move(bins)}};
}

std::vector<std::string> MatrixRows(const BinaryMatrix& m) {
  std::vector<std::string> rows;
  std::istringstream in(m.ToString());
  std::string line;
  while (std::getline(in, line)) rows.push_back(line);
  return rows;
}

void WriteMatrixText(std::ostream& out, const WiretapCodec& codec) {
  out << "# G (" << codec.generator.rows() << "x" << codec.generator.cols()
      << ")\n"
      << codec.generator.ToString() << "# H^T ("
      << codec.parity_check_t.rows() << "x" << codec.parity_check_t.cols()
      << ")\n"
      << codec.parity_check_t.ToString();
}

}  // namespace

Command ParseCommand(std::string_view name) {
  if (name == "limit") return Command::kLimit;
  if (name == "ni") return Command::kNi;
  if (name == "equivocation") return Command::kEquivocation;
  if (name == "matrices") return Command::kMatrices;
  if (name == "compare") return Command::kCompare;
  if (name == "counts") return Command::kCounts;
  throw UsageError("unknown command '" + std::string(name) + "'");
}

std::string CommandName(Command command) {
  switch (command) {
    case Command::kLimit: return "limit";
    case Command::kNi: return "ni";
    case Command::kEquivocation: return "equivocation";
    case Command::kMatrices: return "matrices";
    case Command::kCompare: return "compare";
    case Command::kCounts: return "counts";
  }
  return "unknown";
}

OutputFormat ParseOutputFormat(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw UsageError("unknown format '" + std::string(name) +
                   "' (expected csv or json)");
}

PGrid PGrid::Parse(std::string_view text) {
  const std::vector<std::string_view> parts = Split(text, ':');
  if (parts.size() != 3) {
    throw UsageError("probability grid must be start:stop:points, got '" +
                     std::string(text) + "'");
  }
  PGrid grid;
  grid.start = ParseDouble(parts[0], "grid start");
  grid.stop = ParseDouble(parts[1], "grid stop");
  grid.points = ParseInt(parts[2], "grid point count");
  grid.Validate();
  return grid;
}

void PGrid::Validate() const {
  if (points < 2) throw UsageError("probability grid needs at least 2 points");
  if (!(start >= 0.0 && stop <= 1.0 && start <= stop)) {
    throw UsageError("probability grid must satisfy 0 <= start <= stop <= 1");
  }
}

std::vector<double> PGrid::Values() const {
  Validate();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    out.push_back(i == points - 1
                      ? stop
                      : start + (stop - start) * i / (points - 1));
  }
  return out;
}

FormId ParseForm(std::string_view text) {
  const std::vector<std::string_view> parts = Split(text, ',');
  if (parts.size() != 2) {
    throw UsageError("form must be l,k, got '" + std::string(text) + "'");
  }
  FormId form{ParseInt(parts[0], "l"), ParseInt(parts[1], "k")};
  RequireValidForm(form);
  return form;
}

void ExperimentConfig::Validate() const {
  RequireValidForm(form);
  grid.Validate();
  if (p && !(*p >= 0.0 && *p <= 1.0)) {
    throw UsageError("crossover probability must lie in [0, 1]");
  }
  if (command == Command::kCompare && samples < 1) {
    throw UsageError("sample count must be >= 1");
  }
}

std::vector<double> ExperimentConfig::Probabilities() const {
  if (p) return {*p};
  return grid.Values();
}

void RunLimit(const ExperimentConfig& cfg, std::ostream& out) {
  const std::vector<double> ps = cfg.Probabilities();
  const std::vector<double> limit = LpLimitCurve(cfg.form.l, cfg.form.k, ps);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < ps.size(); ++i) rows.push_back({ps[i], limit[i]});
  EmitTable(cfg, out, {"p", "lp_limit"}, rows);
}

void RunNi(const ExperimentConfig& cfg, std::ostream& out) {
  const CodeTable table = NiTable(cfg);
  std::optional<WiretapCodec> codec;
  if (cfg.emit_matrices) codec = BuildCodec(cfg.form);
  if (cfg.format == OutputFormat::kJson) {
    Json doc;
    doc["metadata"] = Metadata(cfg);
    doc["table"] = TableJson(table);
    if (codec) {
      doc["generator"] = MatrixRows(codec->generator);
      doc["parity_check_t"] = MatrixRows(codec->parity_check_t);
    }
    out << doc.dump(2) << '\n';
    return;
  }
  WriteCodeTable(out, table);
  if (codec) WriteMatrixText(out, *codec);
}

void RunEquivocation(const ExperimentConfig& cfg, std::ostream& out) {
  std::optional<CodeTable> table;
  if (cfg.table_in) {
    std::ifstream in(*cfg.table_in);
    if (!in) throw UsageError("cannot open table file '" + *cfg.table_in + "'");
    table = ParseCodeTable(in);
    RequireValidTable(*table);
  } else {
    table = NiTable(cfg);
  }
  const std::vector<double> ps = cfg.Probabilities();
  const std::vector<double> h = TotalEquivocationCurve(*table, ps);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    rows.push_back({ps[i], h[i], h[i] / table->n()});
  }
  EmitTable(cfg, out, {"p", "equivocation", "rate"}, rows);
}

void RunMatrices(const ExperimentConfig& cfg, std::ostream& out) {
  const WiretapCodec codec = BuildCodec(cfg.form);
  const bool identity = ParityIdentityHolds(codec);
  const bool syndromes = SyndromeCheck(codec);
  const bool full_rank = IsFullRank(codec.generator);
  if (cfg.format == OutputFormat::kJson) {
    Json doc;
    doc["metadata"] = Metadata(cfg);
    doc["generator"] = MatrixRows(codec.generator);
    doc["parity_check_t"] = MatrixRows(codec.parity_check_t);
    doc["parity_identity"] = identity;
    doc["syndrome_check"] = syndromes;
    doc["generator_full_rank"] = full_rank;
    out << doc.dump(2) << '\n';
    return;
  }
  WriteMatrixText(out, codec);
  out << "# parity_identity " << (identity ? "true" : "false") << '\n'
      << "# syndrome_check " << (syndromes ? "true" : "false") << '\n'
      << "# generator_full_rank " << (full_rank ? "true" : "false") << '\n';
}

void RunCompare(const ExperimentConfig& cfg, std::ostream& out,
                std::ostream& diag) {
  const std::vector<double> ps = cfg.Probabilities();
  CompareOptions options;
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  options.closed_form = cfg.closed_form;
  const ComparisonRecord record = CompareForm(cfg.form, ps, options);
  for (double p : record.NiBeatenAt()) {
    diag << "WARNING: a random binning code beats the Ni table at p = "
         << FormatNumber(p) << '\n';
  }
  std::vector<std::vector<double>> rows;
  for (const ComparisonRow& r : record.rows) {
    rows.push_back({r.p, r.ni_rate, r.lp_limit, r.inf_limit, r.rand_max,
                    r.rand_mean, r.rand_min});
  }
  EmitTable(cfg, out,
            {"p", "ni_rate", "lp_limit", "inf_limit", "rand_max", "rand_mean",
             "rand_min"},
            rows);
}

void RunCounts(const ExperimentConfig& cfg, std::ostream& out) {
  const FormId& f = cfg.form;
  const int n = f.n();
  if (f.l > 16) throw ResourceCapError("bin size 2^l is too large to count");
  const int e = 1 << f.l;
  std::vector<std::pair<std::string, std::string>> counts;
  counts.emplace_back("l", std::to_string(f.l));
  counts.emplace_back("k", std::to_string(f.k));
  counts.emplace_back("n", std::to_string(n));
  counts.emplace_back("e", std::to_string(e));
  counts.emplace_back("candidate_rows", Binomial(e + n, e).str());
  counts.emplace_back("appendix_count", AppendixCount(n, e).str());
  const BigInt codes = BinningCodeCount(f);
  counts.emplace_back("binning_code_count", codes.str());
  counts.emplace_back("binning_code_count_approx", ToScientific(codes));
  if (f.l >= 1) {
    counts.emplace_back("path_count_from_1_1",
                        PathCount({1, 1}, f).str());
  }
  if (cfg.format == OutputFormat::kJson) {
    Json doc;
    doc["metadata"] = Metadata(cfg);
    Json values;
    for (const auto& [name, value] : counts) values[name] = value;
    doc["counts"] = std::move(values);
    out << doc.dump(2) << '\n';
    return;
  }
  CsvData data;
  data.columns = {"quantity", "value"};
  for (const auto& [name, value] : counts) data.rows.push_back({name, value});
  WriteCsv(out, data);
}

void RunExperiment(const ExperimentConfig& cfg, std::ostream& out,
                   std::ostream& diag) {
  cfg.Validate();
  switch (cfg.command) {
    case Command::kLimit: return RunLimit(cfg, out);
    case Command::kNi: return RunNi(cfg, out);
    case Command::kEquivocation: return RunEquivocation(cfg, out);
    case Command::kMatrices: return RunMatrices(cfg, out);
    case Command::kCompare: return RunCompare(cfg, out, diag);
    case Command::kCounts: return RunCounts(cfg, out);
  }
}

std::string FormatNumber(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  std::string s(buffer);
  if (s == "-0") s = "0";
  return s;
}

double CsvData::Number(std::size_t row, std::size_t column) const {
  const std::string& cell = rows.at(row).at(column);
  char* end = nullptr;
  const double value = std::strtod(cell.c_str(), &end);
  if (cell.empty() || end != cell.c_str() + cell.size()) {
    // Line numbers count the schema and header lines.
    throw ParseError(row + 3, "'" + cell + "' is not a number");
  }
  return value;
}

std::size_t CsvData::Column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw UsageError("no column named '" + std::string(name) + "'");
}

void WriteCsv(std::ostream& out, const CsvData& data) {
  out << "#schema=" << data.schema << '\n';
  auto write_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  write_row(data.columns);
  for (const auto& row : data.rows) write_row(row);
}

CsvData ParseCsv(std::istream& in) {
  CsvData data;
  std::string line;
  std::size_t line_number = 1;
  if (!std::getline(in, line) || line.rfind("#schema=", 0) != 0) {
    throw ParseError(line_number, "missing '#schema=' line");
  }
  const std::string version = line.substr(8);
  if (version != std::to_string(kCsvSchemaVersion)) {
    throw ParseError(line_number, "unsupported schema '" + version + "'");
  }
  data.schema = kCsvSchemaVersion;
  ++line_number;
  if (!std::getline(in, line)) throw ParseError(line_number, "missing header");
  for (std::string_view cell : Split(line, ',')) {
    data.columns.emplace_back(cell);
  }
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    for (std::string_view cell : Split(line, ',')) cells.emplace_back(cell);
    if (cells.size() != data.columns.size()) {
      throw ParseError(line_number, "expected " +
                                        std::to_string(data.columns.size()) +
                                        " fields, found " +
                                        std::to_string(cells.size()));
    }
    data.rows.push_back(std::move(cells));
  }
  return data;
}

}  // namespace wiretap
