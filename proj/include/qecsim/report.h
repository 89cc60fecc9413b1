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

// Result tables: CSV and JSON emission, CSV parsing and the SVG bar chart.

#ifndef QECSIM_REPORT_H
#define QECSIM_REPORT_H

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qecsim/experiment.h"

namespace qecsim {

struct ResultRow {
    int grid_index = 0;
    double px = 0.0;
    double py = 0.0;
    double pz = 0.0;
    std::string method;
    std::string order;
    double fidelity = 0.0;
    double log_infidelity = 0.0;
    double accepted_mass = 0.0;
    double residual_bound = 0.0;
    std::uint64_t fault_sites = 0;
    std::uint64_t seed = 0;

    bool operator==(const ResultRow&) const = default;
};

/// Ordered key/value pairs written ahead of the table.
using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

ResultRow to_row(const RunResult& result);
std::vector<ResultRow> to_rows(const std::vector<RunResult>& results);

const std::vector<std::string>& csv_columns();

/// `%.17g`, which round-trips every finite double.
std::string format_number(double v);

/// `# key=value` lines, the header, then one line per row.
std::string format_csv(const std::vector<ResultRow>& rows, const ConfigEntries& config);

/// {"config": {...}, "columns": [...], "rows": [{...}, ...]}; numbers use 17
/// significant digits as in the CSV.
std::string format_json(const std::vector<ResultRow>& rows, const ConfigEntries& config);

struct ParsedCsv {
    ConfigEntries config;
    std::vector<ResultRow> rows;
};

/// Inverse of format_csv. Throws std::runtime_error on a malformed table.
ParsedCsv parse_csv(const std::string& text);

/// Per (method, grid_index), the winning order under order_outranks. Ties go
/// to the order listed first in all_orders().
std::map<std::pair<std::string, int>, std::string> best_orders(const std::vector<ResultRow>& rows);

/// Grouped bar chart, one panel per method: x = grid index, one bar per order,
/// bar height = log-infidelity, winners drawn with class "bar best". Throws
/// std::invalid_argument on an empty table.
std::string format_svg(const std::vector<ResultRow>& rows, const std::string& title);

/// Writes `content` to `path`. Throws std::runtime_error when the file cannot
/// be written.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qecsim

#endif  // QECSIM_REPORT_H
