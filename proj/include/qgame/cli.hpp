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

#ifndef QGAME_CLI_HPP_
#define QGAME_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <string>
#include <vector>

#include "qgame/report.hpp"

namespace qgame {

inline constexpr const char* kVersion = "qgame " QGAME_VERSION;

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
  std::string command;
  /// Empty: use the bos parameters below.
  std::string table_path;
  BosParams bos;
  double p = 0.0;
  double q = 0.0;
  double gamma_e = std::numbers::pi / 2.0;
  /// "phi-plus", "zero" (|00>) or "entangler" (J(gamma_e)|00>).
  std::string initial = "phi-plus";
  std::vector<double> move_a = {0.0, 0.0, 0.0};
  std::vector<double> move_b = {0.0, 0.0, 0.0};
  int grid_n = 101;
  double eps = 1e-6;
  int restarts = 16;
  int iters = 400;
  std::uint64_t seed = 42;
  int samples = 1000;
  int pairs = 100;
  /// Monte-Carlo shots for the mw-payoff demonstration sampler; 0 disables.
  int shots = 0;
  std::string mode = "demo";
  OutputFormat format = OutputFormat::kJson;
};

/// Runs one command and returns its report. Throws std::invalid_argument
/// (or TableError) on bad input.
Document RunCommand(const RunConfig& cfg);

/// Exit status for a finished report: kExitCheckFailed if any check failed.
int ExitStatusFor(const Document& doc);

/// Full command-line entry point. `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgame

#endif  // QGAME_CLI_HPP_
