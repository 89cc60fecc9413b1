// Copyright 2026 The qecsim Authors
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

// Command-line front end. Exit codes: 0 success, 1 runtime or I/O failure,
// 2 usage error.

#ifndef QECSIM_CLI_H
#define QECSIM_CLI_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qecsim/experiment.h"
#include "qecsim/report.h"

namespace qecsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
    std::string subcommand;
    RunConfig run;
    /// Empty means every order (sweep, compare-orders) or ZXXZ (run).
    std::optional<SyndromeOrder> order;
    /// Empty means both methods (sweep, compare-orders) or Shor (run).
    std::optional<SMethod> method;
    std::string out;
    std::string format = "csv";
    std::string svg;
    std::string in;
    int workers = 1;
};

/// Parses arguments (without the program name). On failure returns the exit
/// code after writing the message to `err`; help also lands here with 0.
struct ParseOutcome {
    std::optional<CliConfig> config;
    int exit_code = kExitOk;
};
ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The resolved configuration written ahead of every result table.
ConfigEntries config_entries(const CliConfig& config);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qecsim::cli

#endif  // QECSIM_CLI_H
