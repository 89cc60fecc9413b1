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


#include "qecsim/report.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "xml_check.h"

namespace qecsim {
namespace {

ResultRow row(int grid, const std::string& method, const std::string& order, double fidelity) {
    ResultRow r;
    r.grid_index = grid;
    r.px = 1e-10 * grid;
    r.py = 1.0 / 3.0;
    r.pz = 1e-10;
    r.method = method;
    r.order = order;
    r.fidelity = fidelity;
    r.log_infidelity = log_infidelity(fidelity);
    r.accepted_mass = 0.123456789012345678;
    r.residual_bound = 2.5e-17;
    r.fault_sites = 3819;
    r.seed = 42;
    return r;
}

// A 16-environment table for one method with varied winners.
std::vector<ResultRow> grid_table(const std::string& method) {
    const char* orders[] = {"XZXZ", "XZZX", "ZXXZ", "ZXZX"};
    std::vector<ResultRow> rows;
    for (int g = 1; g <= 16; ++g) {
        for (int o = 0; o < 4; ++o) rows.push_back(row(g, method, orders[o], 1.0 - 1e-3 * (1 + (g + o) % 4)));
    }
    return rows;
}

TEST(CsvTest, ColumnsAndConfigHeader) {
    const std::vector<std::string> expected{"grid_index", "px", "py", "pz", "method", "order", "fidelity",
                                            "log_infidelity", "accepted_mass", "residual_bound", "fault_sites",
                                            "seed"};
    EXPECT_EQ(csv_columns(), expected);
    const auto csv = format_csv({row(1, "shor", "ZXXZ", 0.99)}, {{"tool", "qecsim"}, {"mode", "enumerate"}});
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "# tool=qecsim");
    std::getline(in, line);
    EXPECT_EQ(line, "# mode=enumerate");
    std::getline(in, line);
    EXPECT_EQ(line, "grid_index,px,py,pz,method,order,fidelity,log_infidelity,accepted_mass,residual_bound,"
                    "fault_sites,seed");
    std::getline(in, line);
    EXPECT_EQ(line.substr(0, 2), "1,");
    EXPECT_NE(line.find(",0.33333333333333331,"), std::string::npos);
    EXPECT_NE(line.find(",shor,ZXXZ,"), std::string::npos);
    EXPECT_NE(line.find(",3819,42"), std::string::npos);
}

TEST(CsvTest, SeventeenSignificantDigits) {
    EXPECT_EQ(format_number(1.0 / 3.0), "0.33333333333333331");
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    // Trailing zeros are dropped; the value still round-trips.
    EXPECT_EQ(format_number(1e-10), "1e-10");
    for (double v : {2.0 / 3.0 * 1e-4, 0.99999999999999989, 1e-300, 12345.678901234567}) {
        EXPECT_EQ(std::strtod(format_number(v).c_str(), nullptr), v);
    }
    EXPECT_EQ(format_number(15), "15");
}

TEST(CsvTest, RoundTripIsExact) {
    auto rows = grid_table("shor");
    const auto steane = grid_table("steane");
    rows.insert(rows.end(), steane.begin(), steane.end());
    const ConfigEntries config{{"tool", "qecsim"}, {"px", "grid 1e-10..1e-4"}};
    const auto parsed = parse_csv(format_csv(rows, config));
    EXPECT_EQ(parsed.config, config);
    EXPECT_EQ(parsed.rows, rows);
}

TEST(CsvTest, EmptyTableIsHeaderOnly) {
    const auto csv = format_csv({}, {});
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1);
    EXPECT_TRUE(parse_csv(csv).rows.empty());
}

TEST(CsvTest, MalformedInputThrows) {
    EXPECT_THROW(parse_csv(""), std::runtime_error);
    EXPECT_THROW(parse_csv("a,b\n"), std::runtime_error);
    const auto csv = format_csv({row(1, "shor", "ZXXZ", 0.99)}, {});
    EXPECT_THROW(parse_csv(csv + "1,2\n"), std::runtime_error);
    std::string bad = csv;
    bad.replace(bad.find("0.98999"), 1, "x");
    EXPECT_THROW(parse_csv(bad), std::runtime_error);
}

TEST(JsonTest, MirrorsCsvFields) {
    const auto rows = grid_table("steane");
    const auto doc = nlohmann::json::parse(format_json(rows, {{"tool", "qecsim"}, {"note", "a \"quoted\" value"}}));
    EXPECT_EQ(doc["config"]["note"], "a \"quoted\" value");
    EXPECT_EQ(doc["columns"].size(), csv_columns().size());
    ASSERT_EQ(doc["rows"].size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& j = doc["rows"][i];
        for (const auto& c : csv_columns()) EXPECT_TRUE(j.contains(c)) << c;
        EXPECT_EQ(j["grid_index"].get<int>(), rows[i].grid_index);
        EXPECT_EQ(j["order"].get<std::string>(), rows[i].order);
        EXPECT_EQ(j["fidelity"].get<double>(), rows[i].fidelity);
        EXPECT_EQ(j["py"].get<double>(), rows[i].py);
        EXPECT_EQ(j["fault_sites"].get<std::uint64_t>(), rows[i].fault_sites);
    }
    const auto text = format_json(rows, {});
    EXPECT_NE(text.find("0.33333333333333331"), std::string::npos);
    EXPECT_NO_THROW((void)nlohmann::json::parse(format_json({}, {})));
}

TEST(SvgTest, WellFormedWithOneBarPerRow) {
    const auto rows = grid_table("shor");
    const auto check = testing::check_xml(format_svg(rows, "orders <&> methods"));
    ASSERT_TRUE(check.well_formed) << check.error;
    EXPECT_EQ(check.elements.front().name, "svg");
    int bars = 0, best = 0, groups = 0;
    for (const auto& e : check.elements) {
        if (e.name == "rect" && e.attributes.count("class")) {
            const auto& cls = e.attributes.at("class");
            bars += cls == "bar" || cls == "bar best";
            best += cls == "bar best";
        }
        if (e.name == "g" && e.attributes.count("class") && e.attributes.at("class") == "group") ++groups;
    }
    EXPECT_EQ(bars, 64);
    EXPECT_EQ(best, 16);
    EXPECT_EQ(groups, 16);
}

TEST(SvgTest, HighlightMatchesRanking) {
    auto rows = grid_table("shor");
    const auto steane = grid_table("steane");
    rows.insert(rows.end(), steane.begin(), steane.end());
    const auto check = testing::check_xml(format_svg(rows, "t"));
    ASSERT_TRUE(check.well_formed) << check.error;
    std::string method;
    int grid = 0;
    int highlighted = 0;
    for (const auto& e : check.elements) {
        if (e.name != "g" && e.name != "rect") continue;
        const auto cls = e.attributes.count("class") ? e.attributes.at("class") : "";
        if (cls == "panel") method = e.attributes.at("data-method");
        if (cls == "group") grid = std::stoi(e.attributes.at("data-grid"));
        if (cls != "bar best") continue;
        ++highlighted;
        // Independent ranking: the highest log-infidelity in the group.
        const ResultRow* top = nullptr;
        for (const auto& r : rows) {
            if (r.method == method && r.grid_index == grid && (!top || r.log_infidelity > top->log_infidelity)) top = &r;
        }
        ASSERT_NE(top, nullptr);
        EXPECT_EQ(e.attributes.at("data-order"), top->order) << method << grid;
        EXPECT_EQ(best_orders(rows).at({method, grid}), top->order);
    }
    EXPECT_EQ(highlighted, 32);
}

TEST(SvgTest, TiesGoToTheEarlierOrder) {
    std::vector<ResultRow> rows;
    for (const char* o : {"ZXZX", "XZZX", "ZXXZ", "XZXZ"}) rows.push_back(row(1, "shor", o, 1.0));
    EXPECT_EQ(best_orders(rows).at({"shor", 1}), "XZXZ");
}

TEST(SvgTest, EmptyTableThrows) { EXPECT_THROW(format_svg({}, "t"), std::invalid_argument); }

TEST(FileTest, WriteAndFailure) {
    const auto path = std::filesystem::temp_directory_path() / "qecsim_report_test.txt";
    write_text_file(path.string(), "abc\n");
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(content, "abc\n");
    std::filesystem::remove(path);
    EXPECT_THROW(write_text_file("/nonexistent-dir/x/y.csv", "a"), std::runtime_error);
}

}  // namespace
}  // namespace qecsim
