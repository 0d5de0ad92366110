// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgame/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gtest/gtest.h"
#include "qgame/table_io.hpp"

using namespace qgame;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

Document RunJson(std::vector<std::string> args) {
  const Outcome o = Invoke(std::move(args));
  EXPECT_EQ(o.code, kExitOk) << o.err;
  return Document::parse(o.out);
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

// ---------- table files ----------

TEST(TableIo, ParsesOutcomeForm) {
  const GameTable gt = ParseGameTable(
      R"({"outcomes": {"00": [5, 3], "01": [1, 1], "10": [1, 1], "11": [3, 5]}})");
  EXPECT_FALSE(gt.bos.has_value());
  EXPECT_EQ(gt.table.at(0).player1, 5);
  EXPECT_EQ(gt.table.at(3).player2, 5);
}

TEST(TableIo, ParsesBosForm) {
  const GameTable gt = ParseGameTable(R"({"bos": {"alpha": 4, "beta": 4, "gamma_mis": 0, "allow_equal": true}})");
  ASSERT_TRUE(gt.bos.has_value());
  EXPECT_EQ(gt.table.at(0).player1, 4);
  EXPECT_EQ(gt.table.at(1).player1, 0);
}

TEST(TableIo, ErrorsNameTheOffendingKey) {
  try {
    ParseGameTable(R"({"outcomes": {"00": [5, 3], "01": [1, 1], "11": [3, 5]}})");
    FAIL() << "expected TableError";
  } catch (const TableError& e) {
    EXPECT_NE(std::string(e.what()).find("10"), std::string::npos) << e.what();
  }
  EXPECT_THROW(ParseGameTable(R"({"bos": {"alpha": 3, "beta": 5, "gamma_mis": 1}})"),
               std::invalid_argument);
  EXPECT_THROW(ParseGameTable(R"({"outcomes": {"00": [5], "01": [1, 1], "10": [1, 1], "11": [3, 5]}})"),
               TableError);
  EXPECT_THROW(ParseGameTable("not json"), TableError);
  EXPECT_THROW(ParseGameTable(R"({})"), TableError);
  EXPECT_THROW(LoadGameTable("/nonexistent/table.json"), TableError);
}

// ---------- report rendering ----------

TEST(Report, Sig12Rounds) {
  EXPECT_EQ(Sig12(0.1 + 0.2), 0.3);
  EXPECT_EQ(Sig12(4.0 - 1e-15), 4.0);
  EXPECT_EQ(Sig12(0.0), 0.0);
  EXPECT_EQ(Sig12(7.0 / 3), 2.33333333333);
}

TEST(Report, CsvMatchesJson) {
  const std::vector<std::string> base = {"mw-payoff", "--p", "0.25", "--q", "0.75"};
  auto json_args = base, csv_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  const Document doc = RunJson(json_args);
  const Outcome csv = Invoke(csv_args);
  ASSERT_EQ(csv.code, kExitOk);
  std::map<std::string, std::string> rows;
  std::istringstream in(csv.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "path,value");
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    rows[line.substr(0, comma)] = line.substr(comma + 1);
  }
  for (const auto& [path, value] : Flatten(doc)) {
    if (path == "config.format") continue;  // echoes the flag itself
    EXPECT_EQ(rows[path], value) << path;
  }
  EXPECT_EQ(rows["results.payoffs.player1"], "2.125");
}

TEST(Report, TableFormatListsPaths) {
  const Outcome o = Invoke({"mw-payoff", "--format", "table"});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("results.payoffs.player1"), std::string::npos);
}

// ---------- commands ----------

TEST(Cli, MwPayoffExamples) {
  struct Case {
    std::string p, q;
    double u1, u2;
  };
  for (const Case& c : {Case{"0", "0", 4, 4}, Case{"1", "0", 1, 1}, Case{"1", "1", 4, 4},
                        Case{"0.25", "0.75", 2.125, 2.125}}) {
    const Document doc = RunJson({"mw-payoff", "--p", c.p, "--q", c.q});
    EXPECT_NEAR(doc["results"]["payoffs"]["player1"].get<double>(), c.u1, 1e-12);
    EXPECT_NEAR(doc["results"]["payoffs"]["player2"].get<double>(), c.u2, 1e-12);
    EXPECT_TRUE(doc["all_passed"].get<bool>());
  }
  const Document doc = RunJson({"mw-payoff", "--p", "0.25", "--q", "0.75"});
  EXPECT_NEAR(doc["results"]["closed_form"]["m"].get<double>(), 0.375, 1e-12);
}

TEST(Cli, MonteCarloDemoIsLabelled) {
  const Document doc = RunJson({"mw-payoff", "--p", "0.5", "--shots", "1000", "--seed", "3"});
  const auto& mc = doc["results"]["monte_carlo_demo"];
  EXPECT_NE(mc["label"].get<std::string>().find("demonstration only"), std::string::npos);
  int total = 0;
  for (const auto& [k, v] : mc["counts"].items()) total += v.get<int>();
  EXPECT_EQ(total, 1000);
  // Exact payoffs are unaffected by sampling.
  EXPECT_NEAR(doc["results"]["payoffs"]["player1"].get<double>(), 2.5, 1e-12);
}

TEST(Cli, ClassicalEquilibria) {
  const Document doc = RunJson({"classical-eq"});
  EXPECT_EQ(doc["results"]["equilibria"]["equilibria"].size(), 3u);
  EXPECT_FALSE(doc["results"]["dilemma"]["unique_solution"].get<bool>());
}

TEST(Cli, MwEquilibria) {
  const Document doc = RunJson({"mw-eq"});
  EXPECT_EQ(doc["results"]["equilibria"]["equilibria"].size(), 3u);
  EXPECT_TRUE(doc["results"]["dilemma"]["pure_payoffs_equal"].get<bool>());
}

TEST(Cli, EisertAndBridge) {
  const Document e = RunJson({"eisert", "--a", "0", "0", "0", "--b", "0", "0", "0"});
  EXPECT_NEAR(e["results"]["distribution"]["00"].get<double>(), 1.0, 1e-12);
  const Document b = RunJson({"bridge", "--a", "1", "0.2", "0.3", "--b", "0.4", "0.5", "0.6"});
  EXPECT_TRUE(b["all_passed"].get<bool>());
}

TEST(Cli, ReportCarriesConfiguration) {
  const Document doc = RunJson({"conjugate-check", "--samples", "50", "--seed", "11"});
  EXPECT_EQ(doc["config"]["version"].get<std::string>(), kVersion);
  EXPECT_EQ(doc["config"]["seed"].get<std::uint64_t>(), 11u);
  EXPECT_TRUE(doc["config"]["tolerances"].contains("phase"));
  EXPECT_TRUE(doc["config"]["tolerances"].contains("algebra"));
  EXPECT_EQ(doc["results"]["conjugate"]["samples"].get<int>(), 50);
}

TEST(Cli, IdenticalConfigsGiveIdenticalBytes) {
  const std::vector<std::string> args = {"unitary-max", "--restarts", "8", "--iters", "100", "--seed", "5"};
  const Outcome a = Invoke(args), b = Invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TableFileWithEqualAgreementPayoffs) {
  const std::string path = WriteTemp("qgame_equal.json",
                                     R"({"bos": {"alpha": 3, "beta": 3, "gamma_mis": 1, "allow_equal": true}})");
  const Document doc = RunJson({"classical-eq", "--table", path});
  EXPECT_EQ(doc["config"]["table"]["source"].get<std::string>(), path);
  EXPECT_EQ(doc["results"]["equilibria"]["equilibria"].size(), 3u);
  std::filesystem::remove(path);
}

TEST(Cli, TableFileOverridesNothingElse) {
  const std::string path = WriteTemp(
      "qgame_outcomes.json", R"({"outcomes": {"00": [2, 1], "01": [0, 0], "10": [0, 0], "11": [1, 2]}})");
  const Document doc = RunJson({"mw-payoff", "--table", path});
  EXPECT_NEAR(doc["results"]["payoffs"]["player1"].get<double>(), 1.5, 1e-12);
  std::filesystem::remove(path);
}

// ---------- exit codes ----------

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(Invoke({"mw-payoff", "--p", "1.5"}).code, kExitInputError);
  EXPECT_EQ(Invoke({"mw-payoff", "--p", "abc"}).code, kExitInputError);
  EXPECT_EQ(Invoke({"classical-eq", "--alpha", "3", "--beta", "5"}).code, kExitInputError);
  EXPECT_EQ(Invoke({"classical-eq", "--grid", "50"}).code, kExitInputError);
  EXPECT_EQ(Invoke({"unitary-max", "--restarts", "4"}).code, kExitInputError);
  EXPECT_EQ(Invoke({"no-such-command"}).code, kExitInputError);
  EXPECT_EQ(Invoke({}).code, kExitInputError);

  const std::string path = WriteTemp("qgame_missing.json",
                                     R"({"outcomes": {"00": [5, 3], "01": [1, 1], "11": [3, 5]}})");
  const Outcome o = Invoke({"classical-eq", "--table", path});
  EXPECT_EQ(o.code, kExitInputError);
  EXPECT_NE(o.err.find("\"10\""), std::string::npos) << o.err;
  std::filesystem::remove(path);

  const std::string swapped = WriteTemp("qgame_swapped.json", R"({"bos": {"alpha": 3, "beta": 5, "gamma_mis": 1}})");
  EXPECT_EQ(Invoke({"classical-eq", "--table", swapped}).code, kExitInputError);
  std::filesystem::remove(swapped);

  // --table and the bos flags are mutually exclusive.
  EXPECT_EQ(Invoke({"classical-eq", "--table", "x.json", "--alpha", "5"}).code, kExitInputError);
}

TEST(Cli, FailedCheckExitsOne) {
  // With gamma_e = 0 the entangler is the identity, so the closing inverse
  // gate cannot change any outcome and the bridge check must fail.
  const Outcome o = Invoke({"suite", "--gamma-e", "0", "--pairs", "10"});
  EXPECT_EQ(o.code, kExitCheckFailed) << o.out;
  EXPECT_FALSE(Document::parse(o.out)["all_passed"].get<bool>());
}

TEST(Cli, VersionAndHelpExitZero) {
  const Outcome v = Invoke({"--version"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_NE(v.out.find(kVersion), std::string::npos);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}
