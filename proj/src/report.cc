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

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "qecsim/syndrome.h"

namespace qecsim {

namespace {

constexpr const char* kOrderColors[] = {"#4e79a7", "#f28e2b", "#59a14f", "#b07aa1"};

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

double parse_double(const std::string& s) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || (errno == ERANGE && std::isinf(v))) {
        throw std::runtime_error("bad number in table: '" + s + "'");
    }
    return v;
}

std::uint64_t parse_uint(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw std::runtime_error("bad integer in table: '" + s + "'");
    }
    errno = 0;
    const unsigned long long v = std::strtoull(s.c_str(), nullptr, 10);
    if (errno == ERANGE) throw std::runtime_error("integer out of range: '" + s + "'");
    return v;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

int order_slot(const std::string& order) {
    const auto parsed = parse_order(order);
    if (!parsed) return -1;
    const auto& orders = all_orders();
    return static_cast<int>(std::find(orders.begin(), orders.end(), *parsed) - orders.begin());
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

ResultRow to_row(const RunResult& r) {
    ResultRow row;
    row.grid_index = r.config.env.grid_index;
    row.px = r.config.env.probs.px;
    row.py = r.config.env.probs.py;
    row.pz = r.config.env.probs.pz;
    row.method = method_name(r.config.method);
    row.order = order_name(r.config.order);
    row.fidelity = r.fidelity;
    row.log_infidelity = r.log_infidelity;
    row.accepted_mass = r.accepted_mass;
    row.residual_bound = r.residual_bound;
    row.fault_sites = r.fault_sites;
    row.seed = r.config.truncation.seed;
    return row;
}

std::vector<ResultRow> to_rows(const std::vector<RunResult>& results) {
    std::vector<ResultRow> rows;
    rows.reserve(results.size());
    for (const auto& r : results) rows.push_back(to_row(r));
    return rows;
}

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols{
        "grid_index", "px",  "py", "pz", "method", "order", "fidelity", "log_infidelity", "accepted_mass",
        "residual_bound", "fault_sites", "seed"};
    return cols;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_csv(const std::vector<ResultRow>& rows, const ConfigEntries& config) {
    std::ostringstream out;
    for (const auto& [key, value] : config) out << "# " << key << '=' << value << '\n';
    const auto& cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto& r : rows) {
        out << r.grid_index << ',' << format_number(r.px) << ',' << format_number(r.py) << ',' << format_number(r.pz)
            << ',' << r.method << ',' << r.order << ',' << format_number(r.fidelity) << ','
            << format_number(r.log_infidelity) << ',' << format_number(r.accepted_mass) << ','
            << format_number(r.residual_bound) << ',' << r.fault_sites << ',' << r.seed << '\n';
    }
    return out.str();
}

std::string format_json(const std::vector<ResultRow>& rows, const ConfigEntries& config) {
    // nlohmann picks the shortest round-trip form for doubles, so numbers are
    // written by hand and only strings go through the library.
    auto str = [](const std::string& s) { return nlohmann::json(s).dump(); };
    std::ostringstream out;
    out << "{\n  \"config\": {";
    for (std::size_t i = 0; i < config.size(); ++i) {
        out << (i ? ",\n" : "\n") << "    " << str(config[i].first) << ": " << str(config[i].second);
    }
    out << (config.empty() ? "},\n" : "\n  },\n");
    out << "  \"columns\": [";
    const auto& cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? ", " : "") << str(cols[i]);
    out << "],\n  \"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out << (i ? ",\n" : "\n") << "    {\"grid_index\": " << r.grid_index << ", \"px\": " << format_number(r.px)
            << ", \"py\": " << format_number(r.py) << ", \"pz\": " << format_number(r.pz)
            << ", \"method\": " << str(r.method) << ", \"order\": " << str(r.order)
            << ", \"fidelity\": " << format_number(r.fidelity)
            << ", \"log_infidelity\": " << format_number(r.log_infidelity)
            << ", \"accepted_mass\": " << format_number(r.accepted_mass)
            << ", \"residual_bound\": " << format_number(r.residual_bound) << ", \"fault_sites\": " << r.fault_sites
            << ", \"seed\": " << r.seed << "}";
    }
    out << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

ParsedCsv parse_csv(const std::string& text) {
    ParsedCsv out;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    const auto& cols = csv_columns();
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen && line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw std::runtime_error("config line without '=': " + line);
            out.config.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
            continue;
        }
        const auto fields = split(line, ',');
        if (!header_seen) {
            if (fields != cols) throw std::runtime_error("unexpected CSV header: " + line);
            header_seen = true;
            continue;
        }
        if (fields.size() != cols.size()) throw std::runtime_error("wrong field count: " + line);
        ResultRow r;
        r.grid_index = static_cast<int>(parse_uint(fields[0]));
        r.px = parse_double(fields[1]);
        r.py = parse_double(fields[2]);
        r.pz = parse_double(fields[3]);
        r.method = fields[4];
        r.order = fields[5];
        r.fidelity = parse_double(fields[6]);
        r.log_infidelity = parse_double(fields[7]);
        r.accepted_mass = parse_double(fields[8]);
        r.residual_bound = parse_double(fields[9]);
        r.fault_sites = parse_uint(fields[10]);
        r.seed = parse_uint(fields[11]);
        out.rows.push_back(std::move(r));
    }
    if (!header_seen) throw std::runtime_error("CSV header missing");
    return out;
}

std::map<std::pair<std::string, int>, std::string> best_orders(const std::vector<ResultRow>& rows) {
    std::map<std::pair<std::string, int>, const ResultRow*> best;
    for (const auto& r : rows) {
        const auto key = std::make_pair(r.method, r.grid_index);
        auto it = best.find(key);
        if (it == best.end()) {
            best.emplace(key, &r);
            continue;
        }
        const ResultRow* b = it->second;
        if (order_outranks(r.log_infidelity, r.fidelity, b->log_infidelity, b->fidelity) ||
            (r.log_infidelity == b->log_infidelity && r.fidelity == b->fidelity &&
             order_slot(r.order) < order_slot(b->order))) {
            it->second = &r;
        }
    }
    std::map<std::pair<std::string, int>, std::string> out;
    for (const auto& [key, row] : best) out[key] = row->order;
    return out;
}

std::string format_svg(const std::vector<ResultRow>& rows, const std::string& title) {
    if (rows.empty()) throw std::invalid_argument("cannot chart an empty result table");

    std::set<int> grid_set;
    std::vector<std::string> methods;
    for (const auto& r : rows) {
        grid_set.insert(r.grid_index);
        if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);
    }
    const std::vector<int> grid(grid_set.begin(), grid_set.end());
    const auto winners = best_orders(rows);

    constexpr double kLeft = 60, kRight = 20, kTop = 50, kPanel = 220, kPanelGap = 60;
    constexpr double kBar = 10, kGroupGap = 12;
    const double group_width = 4 * kBar + kGroupGap;
    const double plot_width = group_width * static_cast<double>(grid.size());
    const double width = kLeft + plot_width + kRight;
    const double height = kTop + static_cast<double>(methods.size()) * (kPanel + kPanelGap) + 30;
    auto y_of = [&](double panel_top, double v) {
        return panel_top + kPanel * (1.0 - std::clamp(v, 0.0, kLogInfidelityCap) / kLogInfidelityCap);
    };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width) << "\" height=\"" << fixed(height)
      << "\" viewBox=\"0 0 " << fixed(width) << ' ' << fixed(height) << "\" font-family=\"sans-serif\">\n";
    s << "  <title>" << xml_escape(title) << "</title>\n";
    s << "  <rect x=\"0\" y=\"0\" width=\"" << fixed(width) << "\" height=\"" << fixed(height)
      << "\" fill=\"white\"/>\n";
    s << "  <text x=\"" << fixed(width / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << xml_escape(title) << "</text>\n";

    // Legend.
    for (int k = 0; k < 4; ++k) {
        const double x = kLeft + 110.0 * k;
        s << "  <rect x=\"" << fixed(x) << "\" y=\"32\" width=\"10\" height=\"10\" fill=\"" << kOrderColors[k]
          << "\"/>\n";
        s << "  <text x=\"" << fixed(x + 14) << "\" y=\"41\" font-size=\"11\">" << order_name(all_orders()[k])
          << "</text>\n";
    }
    s << "  <text x=\"" << fixed(kLeft + 440) << "\" y=\"41\" font-size=\"11\">outlined = best order</text>\n";

    for (std::size_t m = 0; m < methods.size(); ++m) {
        const double top = kTop + static_cast<double>(m) * (kPanel + kPanelGap) + 20;
        s << "  <g class=\"panel\" data-method=\"" << xml_escape(methods[m]) << "\">\n";
        s << "    <text x=\"" << fixed(kLeft) << "\" y=\"" << fixed(top - 6) << "\" font-size=\"13\">"
          << xml_escape(methods[m]) << "</text>\n";
        for (double tick = 0; tick <= kLogInfidelityCap; tick += 5) {
            const double y = y_of(top, tick);
            s << "    <line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(kLeft + plot_width)
              << "\" y2=\"" << fixed(y) << "\" stroke=\"#dddddd\"/>\n";
            s << "    <text x=\"" << fixed(kLeft - 6) << "\" y=\"" << fixed(y + 4)
              << "\" text-anchor=\"end\" font-size=\"10\">" << tick << "</text>\n";
        }
        s << "    <text transform=\"translate(16," << fixed(top + kPanel / 2)
          << ") rotate(-90)\" text-anchor=\"middle\" font-size=\"11\">-log10(1 - F)</text>\n";

        for (std::size_t g = 0; g < grid.size(); ++g) {
            const double gx = kLeft + group_width * static_cast<double>(g) + kGroupGap / 2;
            s << "    <g class=\"group\" data-grid=\"" << grid[g] << "\">\n";
            for (const auto& r : rows) {
                if (r.method != methods[m] || r.grid_index != grid[g]) continue;
                const int slot = order_slot(r.order);
                if (slot < 0) continue;
                const auto win = winners.find({r.method, r.grid_index});
                const bool best = win != winners.end() && win->second == r.order;
                const double y = y_of(top, r.log_infidelity);
                s << "      <rect class=\"" << (best ? "bar best" : "bar") << "\" data-order=\"" << r.order
                  << "\" data-value=\"" << format_number(r.log_infidelity) << "\" x=\""
                  << fixed(gx + kBar * slot) << "\" y=\"" << fixed(y) << "\" width=\"" << fixed(kBar)
                  << "\" height=\"" << fixed(top + kPanel - y) << "\" fill=\"" << kOrderColors[slot] << '"'
                  << (best ? " stroke=\"black\" stroke-width=\"2\"" : "") << "/>\n";
            }
            s << "      <text x=\"" << fixed(gx + 2 * kBar) << "\" y=\"" << fixed(top + kPanel + 14)
              << "\" text-anchor=\"middle\" font-size=\"10\">" << grid[g] << "</text>\n";
            s << "    </g>\n";
        }
        s << "    <line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(top + kPanel) << "\" x2=\""
          << fixed(kLeft + plot_width) << "\" y2=\"" << fixed(top + kPanel) << "\" stroke=\"black\"/>\n";
        s << "    <text x=\"" << fixed(kLeft + plot_width / 2) << "\" y=\"" << fixed(top + kPanel + 30)
          << "\" text-anchor=\"middle\" font-size=\"11\">environment (grid index)</text>\n";
        s << "  </g>\n";
    }
    s << "</svg>\n";
    return s.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    out.close();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace qecsim
