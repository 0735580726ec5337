// Copyright 2026 The qduopoly Authors
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

#ifndef QDUOPOLY_CLI_H_
#define QDUOPOLY_CLI_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qduopoly/market.h"

namespace qduopoly {
namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

// Fixed CSV/report number format: 12 significant digits, '.' separator.
std::string FormatNumber(double v);

struct FigureOptions {
  double a = 30.0;
  double c = 3.0;
  std::optional<double> gamma;  // overrides the per-figure defaults
  int best_reply_samples = 201;
  int gamma_samples = 200;
};

// Writes fig0.csv .. fig3.csv into `out_dir`, creating it if needed. Returns
// the written paths; throws std::runtime_error on I/O failure.
std::vector<std::filesystem::path> WriteFigures(
    const std::filesystem::path& out_dir, const FigureOptions& options);

// Entry point shared by the executable and the tests. Subcommands:
// equilibrium | payoff | figures | verify. Returns the process exit code.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cli
}  // namespace qduopoly

#endif  // QDUOPOLY_CLI_H_
