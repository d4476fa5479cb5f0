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

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "wiretap/equivocation.h"
#include "wiretap/errors.h"
#include "wiretap/lp_limit.h"
#include "wiretap/table_io.h"

namespace wiretap {
namespace {

std::string Execute(const ExperimentConfig& cfg) {
  std::ostringstream out;
  std::ostringstream diag;
  RunExperiment(cfg, out, diag);
  return out.str();
}

ExperimentConfig Config(Command command, FormId form, const char* grid) {
  ExperimentConfig cfg;
  cfg.command = command;
  cfg.form = form;
  cfg.grid = PGrid::Parse(grid);
  cfg.timestamp = false;
  return cfg;
}

TEST(PGridTest, ParsesAndSpansClosedInterval) {
  const PGrid grid = PGrid::Parse("0:0.5:101");
  const std::vector<double> v = grid.Values();
  ASSERT_EQ(v.size(), 101u);
  EXPECT_EQ(v.front(), 0.0);
  EXPECT_EQ(v.back(), 0.5);
  EXPECT_DOUBLE_EQ(v[20], 0.1);
  EXPECT_EQ(PGrid{}.Values(), v);
}

TEST(PGridTest, RejectsBadGrids) {
  EXPECT_THROW(PGrid::Parse("0:0.5:0"), UsageError);
  EXPECT_THROW(PGrid::Parse("0:0.5:1"), UsageError);
  EXPECT_THROW(PGrid::Parse("0.5:0.1:5"), UsageError);
  EXPECT_THROW(PGrid::Parse("0:1.5:5"), UsageError);
  EXPECT_THROW(PGrid::Parse("0:0.5"), UsageError);
  EXPECT_THROW(PGrid::Parse("a:0.5:3"), UsageError);
}

TEST(ParseFormTest, Examples) {
  EXPECT_EQ(ParseForm("2,3"), (FormId{2, 3}));
  EXPECT_THROW(ParseForm("2"), UsageError);
  EXPECT_THROW(ParseForm("2,0"), UsageError);
  EXPECT_THROW(ParseForm("-1,2"), UsageError);
  EXPECT_THROW(ParseForm("20,20"), UsageError);
}

TEST(FormatNumberTest, TwelveSignificantDigits) {
  EXPECT_EQ(FormatNumber(0.6746919968329935), "0.674691996833");
  EXPECT_EQ(FormatNumber(0.5), "0.5");
  EXPECT_EQ(FormatNumber(0.0), "0");
  EXPECT_EQ(FormatNumber(-0.0), "0");
  EXPECT_EQ(FormatNumber(1e-13), "1e-13");
}

TEST(RunLimitTest, CurveFromZeroToRate) {
  const std::string text = Execute(Config(Command::kLimit, {1, 4}, "0:0.5:11"));
  std::istringstream in(text);
  const CsvData csv = ParseCsv(in);
  EXPECT_EQ(csv.columns, (std::vector<std::string>{"p", "lp_limit"}));
  ASSERT_EQ(csv.rows.size(), 11u);
  EXPECT_EQ(csv.Number(0, 1), 0.0);
  EXPECT_EQ(csv.Number(10, 1), 0.8);
  for (std::size_t i = 1; i < csv.rows.size(); ++i) {
    EXPECT_GE(csv.Number(i, 1), csv.Number(i - 1, 1));
  }
  EXPECT_EQ(text.rfind("#schema=1\n", 0), 0u);
}

TEST(RunLimitTest, CappedAtRateForSixteenWordBins) {
  ExperimentConfig cfg = Config(Command::kLimit, {4, 1}, "0:0.5:11");
  std::istringstream in(Execute(cfg));
  const CsvData csv = ParseCsv(in);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    EXPECT_LE(csv.Number(i, 1), 0.2 + 1e-12);
  }
  EXPECT_EQ(csv.Number(10, 1), 0.2);
}

TEST(RunLimitTest, SinglePointAndRowCap) {
  ExperimentConfig cfg = Config(Command::kLimit, {2, 3}, "0:0.5:3");
  cfg.p = 0.5;
  std::istringstream in(Execute(cfg));
  const CsvData csv = ParseCsv(in);
  ASSERT_EQ(csv.rows.size(), 1u);
  EXPECT_EQ(csv.Number(0, 1), 0.6);

  ExperimentConfig big = Config(Command::kLimit, {8, 4}, "0:0.5:3");
  EXPECT_THROW(Execute(big), ResourceCapError);
}

TEST(CsvTest, RoundTripIsByteIdenticalAndValuesMatchMemory) {
  ExperimentConfig cfg = Config(Command::kCompare, {2, 3}, "0.05:0.45:5");
  cfg.samples = 50;
  const std::string text = Execute(cfg);
  std::istringstream in(text);
  const CsvData csv = ParseCsv(in);
  std::ostringstream again;
  WriteCsv(again, csv);
  EXPECT_EQ(again.str(), text);

  const std::vector<double> ps = cfg.grid.Values();
  const std::vector<double> limit = LpLimitCurve(2, 3, ps);
  const std::size_t column = csv.Column("lp_limit");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    EXPECT_EQ(csv.Number(i, column), std::stod(FormatNumber(limit[i])));
  }
}

TEST(CsvTest, ParseErrors) {
  std::istringstream no_schema("p,x\n0.1,2\n");
  EXPECT_THROW(ParseCsv(no_schema), ParseError);
  std::istringstream bad_version("#schema=2\np,x\n");
  EXPECT_THROW(ParseCsv(bad_version), ParseError);
  std::istringstream ragged("#schema=1\np,x\n0.1\n");
  try {
    ParseCsv(ragged);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(RunCompareTest, OneFourNiEqualsLimit) {
  ExperimentConfig cfg = Config(Command::kCompare, {1, 4}, "0:0.5:11");
  cfg.samples = 100;
  std::istringstream in(Execute(cfg));
  const CsvData csv = ParseCsv(in);
  EXPECT_EQ(csv.columns,
            (std::vector<std::string>{"p", "ni_rate", "lp_limit", "inf_limit",
                                      "rand_max", "rand_mean", "rand_min"}));
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    EXPECT_NEAR(csv.Number(i, 1), csv.Number(i, 2), 1e-9);
  }
}

TEST(RunCompareTest, ThreeTwoNiSitsBetweenRandomAndLimit) {
  ExperimentConfig cfg = Config(Command::kCompare, {3, 2}, "0.15:0.35:3");
  cfg.samples = 200;
  std::istringstream in(Execute(cfg));
  const CsvData csv = ParseCsv(in);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    EXPECT_GT(csv.Number(i, csv.Column("ni_rate")),
              csv.Number(i, csv.Column("rand_max")));
    EXPECT_LT(csv.Number(i, csv.Column("ni_rate")),
              csv.Number(i, csv.Column("lp_limit")));
  }
}

TEST(RunCompareTest, DeterministicForFixedSeed) {
  ExperimentConfig cfg = Config(Command::kCompare, {2, 3}, "0.05:0.45:3");
  cfg.samples = 30;
  cfg.seed = 9;
  EXPECT_EQ(Execute(cfg), Execute(cfg));
  cfg.format = OutputFormat::kJson;
  EXPECT_EQ(Execute(cfg), Execute(cfg));
}

TEST(RunCompareTest, JsonCarriesMetadata) {
  ExperimentConfig cfg = Config(Command::kCompare, {2, 3}, "0.05:0.45:3");
  cfg.samples = 30;
  cfg.seed = 9;
  cfg.format = OutputFormat::kJson;
  cfg.timestamp = true;
  const auto doc = nlohmann::json::parse(Execute(cfg));
  EXPECT_EQ(doc["metadata"]["seed"], 9);
  EXPECT_EQ(doc["metadata"]["samples"], 30);
  EXPECT_EQ(doc["metadata"]["grid"]["points"], 3);
  EXPECT_TRUE(doc["metadata"].contains("rng"));
  EXPECT_TRUE(doc["metadata"].contains("timestamp"));
  EXPECT_EQ(doc["rows"].size(), 3u);
  EXPECT_EQ(doc["columns"][1], "ni_rate");
}

TEST(RunNiTest, EmitsParsableTable) {
  const std::string text = Execute(Config(Command::kNi, {1, 3}, "0:0.5:3"));
  EXPECT_EQ(ParseCodeTable(text), StandardTable({1, 3}));
  ExperimentConfig closed = Config(Command::kNi, {2, 3}, "0:0.5:3");
  closed.closed_form = true;
  EXPECT_EQ(ParseCodeTable(Execute(closed)), ClosedFormTable({2, 3}));
}

TEST(RunNiTest, EmitsMatricesOnRequest) {
  ExperimentConfig cfg = Config(Command::kNi, {2, 3}, "0:0.5:3");
  cfg.emit_matrices = true;
  const std::string text = Execute(cfg);
  EXPECT_NE(text.find("# G (5x5)\n11111\n10111\n"), std::string::npos);
  cfg.format = OutputFormat::kJson;
  const auto doc = nlohmann::json::parse(Execute(cfg));
  EXPECT_EQ(doc["table"]["bins"].size(), 8u);
  EXPECT_EQ(doc["parity_check_t"][0], "111");
}

TEST(RunEquivocationTest, ReadsUserTable) {
  const std::string path = ::testing::TempDir() + "eq_table.txt";
  {
    std::ofstream f(path);
    f << "1 1\n00 11\n01 10\n";
  }
  ExperimentConfig cfg = Config(Command::kEquivocation, {1, 4}, "0:0.5:3");
  cfg.table_in = path;
  cfg.p = 0.1;
  std::istringstream in(Execute(cfg));
  const CsvData csv = ParseCsv(in);
  ASSERT_EQ(csv.rows.size(), 1u);
  EXPECT_NEAR(csv.Number(0, 1), 0.680077045728, 1e-12);
  EXPECT_NEAR(csv.Number(0, 2), 0.340038522864, 1e-12);
  std::remove(path.c_str());
}

TEST(RunEquivocationTest, MalformedTableNamesTheLine) {
  const std::string path = ::testing::TempDir() + "bad_table.txt";
  {
    std::ofstream f(path);
    f << "1 1\n00 11\n01 1x\n";
  }
  ExperimentConfig cfg = Config(Command::kEquivocation, {1, 1}, "0:0.5:3");
  cfg.table_in = path;
  try {
    Execute(cfg);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  {
    std::ofstream f(path);
    f << "1 1\n00 00\n01 10\n";
  }
  EXPECT_THROW(Execute(cfg), ValidationError);
  std::remove(path.c_str());
  cfg.table_in = ::testing::TempDir() + "does_not_exist.txt";
  EXPECT_THROW(Execute(cfg), UsageError);
}

TEST(RunMatricesTest, PrintsMatricesAndChecks) {
  const std::string text = Execute(Config(Command::kMatrices, {3, 1}, "0:0.5:3"));
  EXPECT_NE(text.find("1000\n1100\n1010\n1111\n"), std::string::npos);
  EXPECT_NE(text.find("# parity_identity true"), std::string::npos);
  EXPECT_NE(text.find("# syndrome_check true"), std::string::npos);
  EXPECT_THROW(Execute(Config(Command::kMatrices, {3, 2}, "0:0.5:3")),
               UnsupportedFormError);
}

TEST(RunCountsTest, ReportsAllCounts) {
  for (auto [form, approx] : {std::pair{FormId{1, 4}, "1.92e+17"},
                              {FormId{2, 3}, "5.93e+19"},
                              {FormId{3, 2}, "4.15e+15"},
                              {FormId{4, 1}, "3.01e+08"}}) {
    std::istringstream in(Execute(Config(Command::kCounts, form, "0:0.5:3")));
    const CsvData csv = ParseCsv(in);
    std::map<std::string, std::string> values;
    for (const auto& row : csv.rows) values[row[0]] = row[1];
    EXPECT_EQ(values["binning_code_count_approx"], approx);
    EXPECT_EQ(values["candidate_rows"], values["appendix_count"]);
  }
  std::istringstream in(Execute(Config(Command::kCounts, {1, 4}, "0:0.5:3")));
  const CsvData csv = ParseCsv(in);
  std::map<std::string, std::string> values;
  for (const auto& row : csv.rows) values[row[0]] = row[1];
  EXPECT_EQ(values["candidate_rows"], "21");
  EXPECT_EQ(values["binning_code_count"], "191898783962510625");
  EXPECT_EQ(values["path_count_from_1_1"], "1");
}

TEST(ExperimentConfigTest, Validation) {
  ExperimentConfig cfg;
  cfg.p = 1.5;
  EXPECT_THROW(cfg.Validate(), UsageError);
  EXPECT_THROW(ParseCommand("plot"), UsageError);
  EXPECT_THROW(ParseOutputFormat("xml"), UsageError);
  EXPECT_EQ(CommandName(ParseCommand("equivocation")), "equivocation");
}

}  // namespace
}  // namespace wiretap
