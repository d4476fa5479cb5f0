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


#include "cli_app.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wiretap/errors.h"
#include "wiretap/experiment.h"

namespace wiretap::cli {
namespace {

struct Flags {
  std::string form = "1,4";
  std::string grid = "0:0.5:101";
  std::optional<double> p;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  std::string table_in;
  bool emit_matrices = false;
  bool closed_form = false;
};

void AddCommonFlags(CLI::App* command, Flags& flags) {
  command->add_option("--form", flags.form, "Code form as l,k")
      ->capture_default_str();
  command->add_option("--p-grid", flags.grid, "Probability grid start:stop:points")
      ->capture_default_str();
  command->add_option("--p", flags.p, "Single crossover probability");
  command->add_option("--samples", flags.samples, "Random codes to sample")
      ->capture_default_str();
  command->add_option("--seed", flags.seed, "Sampler seed")
      ->capture_default_str();
  command->add_option("--out", flags.out, "Output file (default stdout)");
  command->add_option("--format", flags.format, "csv or json")
      ->capture_default_str();
  command->add_option("--table-in", flags.table_in, "Code table file");
  command->add_flag("--emit-matrices", flags.emit_matrices,
                    "Also print generator and parity-check matrices");
  command->add_flag("--closed-form", flags.closed_form,
                    "Build Ni tables in closed form instead of recursively");
}

ExperimentConfig ToConfig(const std::string& command, const Flags& flags) {
  ExperimentConfig cfg;
  cfg.command = ParseCommand(command);
  cfg.form = ParseForm(flags.form);
  cfg.grid = PGrid::Parse(flags.grid);
  cfg.p = flags.p;
  cfg.samples = flags.samples;
  cfg.seed = flags.seed;
  cfg.format = ParseOutputFormat(flags.format);
  if (!flags.table_in.empty()) cfg.table_in = flags.table_in;
  cfg.emit_matrices = flags.emit_matrices;
  cfg.closed_form = flags.closed_form;
  return cfg;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Wiretap channel equivocation workbench"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"limit", "LP-derived equivocation limit over a probability grid"},
      {"ni", "Print the Ni code table of a form"},
      {"equivocation", "Equivocation curve of a Ni table or a table file"},
      {"matrices", "Generator and parity-check matrices of a linear form"},
      {"compare", "Ni code vs random binning codes and bounds"},
      {"counts", "Candidate-row, binning-code and path counts"},
  };
  for (const auto& [name, help] : commands) {
    AddCommonFlags(app.add_subcommand(name, help), flags);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    const ExperimentConfig cfg = ToConfig(command, flags);
    std::ostringstream buffer;
    RunExperiment(cfg, buffer, err);
    if (flags.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(flags.out, std::ios::binary);
      if (!file) throw UsageError("cannot open output file '" + flags.out + "'");
      file << buffer.str();
      if (!file) throw UsageError("failed writing '" + flags.out + "'");
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ResourceCapError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace wiretap::cli
