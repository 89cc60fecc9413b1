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

#include "qecsim/cli.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "qecsim/ancilla.h"
#include "qecsim/self_test.h"
#include "qecsim/steane_code.h"

namespace qecsim::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string resolve_sequence(const std::string& text) {
    if (text == "full") return kFullSequence;
    if (text == "desk") return kDeskSequence;
    return text;
}

std::string join_orders(const CliConfig& c) {
    if (c.order) return order_name(*c.order);
    if (c.subcommand == "run") return order_name(SyndromeOrder::ZXXZ);
    std::string out;
    for (auto o : all_orders()) out += (out.empty() ? "" : " ") + order_name(o);
    return out;
}

std::string join_methods(const CliConfig& c) {
    if (c.method) return method_name(*c.method);
    return c.subcommand == "run" ? "shor" : "shor steane";
}

std::vector<SMethod> methods_of(const CliConfig& c) {
    if (c.method) return {*c.method};
    return {SMethod::Shor, SMethod::Steane};
}

std::vector<SyndromeOrder> orders_of(const CliConfig& c) {
    if (c.order) return {*c.order};
    return {all_orders().begin(), all_orders().end()};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit(const CliConfig& c, const std::vector<ResultRow>& rows, std::ostream& out, std::ostream& err,
         bool table_to_stdout) {
    try {
        const ConfigEntries entries = config_entries(c);
        const std::string text = c.format == "json" ? format_json(rows, entries) : format_csv(rows, entries);
        if (!c.out.empty()) {
            write_text_file(c.out, text);
        } else if (table_to_stdout) {
            out << text;
        }
        if (!c.svg.empty()) {
            const std::string title = "-log10(1 - F) by syndrome order, sequence " + c.run.sequence;
            write_text_file(c.svg, format_svg(rows, title));
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

int do_self_test(std::ostream& out) {
    const auto checks = run_self_test();
    out << format_check_table(checks);
    for (auto kind : {AncillaKind::Shor, AncillaKind::SteaneZero, AncillaKind::SteanePlus}) {
        const auto faults = undetected_faults(kind);
        out << "\nundetected single faults, " << ancilla_name(kind) << " (" << faults.size() << "):\n";
        out << "site op wire pauli accept overlap\n" << format_fault_report(faults);
    }
    for (const auto& c : checks) {
        if (!c.passed) return kExitFailure;
    }
    return kExitOk;
}

int do_compare(const CliConfig& c, std::ostream& out, std::ostream& err) {
    std::vector<RunResult> all;
    char line[160];
    out << "method  order  log_infidelity         fidelity               residual_bound\n";
    for (auto method : methods_of(c)) {
        RunConfig base = c.run;
        base.method = method;
        const auto cmp = compare_orders(base);
        for (const auto& r : cmp.results) {
            std::snprintf(line, sizeof line, "%-7s %-6s %-22.17g %-22.17g %.3g%s\n", method_name(method).c_str(),
                          order_name(r.config.order).c_str(), r.log_infidelity, r.fidelity, r.residual_bound,
                          r.config.order == cmp.best ? "  <- best" : "");
            out << line;
            all.push_back(r);
        }
    }
    return emit(c, to_rows(all), out, err, false);
}

int do_render(const CliConfig& c, std::ostream& err) {
    try {
        const auto parsed = parse_csv(read_text_file(c.in));
        std::string sequence = "?";
        for (const auto& [k, v] : parsed.config) {
            if (k == "sequence") sequence = v;
        }
        write_text_file(c.svg, format_svg(parsed.rows, "-log10(1 - F) by syndrome order, sequence " + sequence));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace

ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig c;
    CLI::App app{"Steane-code syndrome-order simulator under biased Pauli noise", "qecsim"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1, 1);

    std::string order_text;
    std::string method_text;
    std::string sequence = kDeskSequence;
    std::string trunc = "2";
    std::string mode = "enumerate";
    std::string theta = "noisy";
    std::string composite = "left-to-right";
    auto& probs = c.run.env.probs;

    app.add_option("--order", order_text, "Syndrome order; sweep and compare-orders default to all four")
        ->check(CLI::IsMember({"xzxz", "xzzx", "zxxz", "zxzx"}, CLI::ignore_case))
        ->type_name("ORDER");
    app.add_option("--method", method_text, "Ancilla method; sweep and compare-orders default to both")
        ->check(CLI::IsMember({"shor", "steane"}, CLI::ignore_case))
        ->type_name("METHOD");
    app.add_option("--px", probs.px, "Bit-flip probability per fault site")->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app.add_option("--py", probs.py, "Y-error probability per fault site")->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app.add_option("--pz", probs.pz, "Phase-flip probability per fault site; also the grid's pz in sweep")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app.add_option("--sequence", sequence, "Composite letters A = HST, B = HT; 'full' or 'desk' for the presets")
        ->capture_default_str();
    app.add_option("--trunc-weight", trunc, "Most faults followed per pattern, or 'full' for every pattern")
        ->capture_default_str();
    app.add_option("--mode", mode, "Exact weight enumeration or Monte Carlo")
        ->check(CLI::IsMember({"enumerate", "mc"}, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--samples", c.run.truncation.samples, "Monte Carlo samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", c.run.truncation.seed, "Monte Carlo seed")->capture_default_str();
    app.add_option("--out", c.out, "Result file; standard output when omitted");
    app.add_option("--format", c.format, "Result format")
        ->check(CLI::IsMember({"csv", "json"}, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--svg", c.svg, "Also write a bar chart of the table");
    app.add_option("--workers", c.workers, "Threads used by sweep")->check(CLI::Range(1, 1024))->capture_default_str();
    app.add_option("--theta", theta, "Magic-state preparation noise")
        ->check(CLI::IsMember({"noisy", "noiseless"}))
        ->capture_default_str();
    app.add_option("--composite-order", composite, "Gate order inside A and B")
        ->check(CLI::IsMember({"left-to-right", "operator-product"}))
        ->capture_default_str();
    app.add_flag("--single-set", c.run.single_set, "One syndrome set per round instead of two");

    app.add_subcommand("run", "Simulate one configuration")->fallthrough();
    app.add_subcommand("sweep", "All 16 environments of the (px, py) grid")->fallthrough();
    app.add_subcommand("compare-orders", "All four syndrome orders in one environment")->fallthrough();
    app.add_subcommand("self-test", "Built-in sanity checks")->fallthrough();
    auto* render = app.add_subcommand("render", "Chart an existing CSV table")->fallthrough();
    render->add_option("--in", c.in, "CSV table to chart")->required();

    std::vector<const char*> argv{"qecsim"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        c.subcommand = app.get_subcommands().front()->get_name();
        if (!order_text.empty()) c.order = parse_order(order_text);
        if (!method_text.empty()) c.method = parse_method(method_text);
        if (c.order) c.run.order = *c.order;
        if (c.method) c.run.method = *c.method;
        c.run.sequence = resolve_sequence(sequence);
        try {
            expand_sequence(c.run.sequence);
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError("--sequence", e.what());
        }
        if (trunc == "full") {
            c.run.truncation.max_weight.reset();
        } else {
            int k = -1;
            if (!CLI::detail::lexical_cast(trunc, k) || k < 0) {
                throw CLI::ValidationError("--trunc-weight", "expected a non-negative integer or 'full', got '" + trunc + "'");
            }
            c.run.truncation.max_weight = k;
        }
        c.run.truncation.mode = mode == "mc" ? SimMode::MonteCarlo : SimMode::Enumerate;
        c.run.noisy_theta = theta == "noisy";
        c.run.reverse_composites = composite == "operator-product";
        for (auto& ch : c.format) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        try {
            probs.validate();
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError("--px/--py/--pz", e.what());
        }
        if (c.subcommand == "render" && c.svg.empty()) throw CLI::ValidationError("render", "--svg is required");
    } catch (const CLI::CallForHelp& e) {
        return {std::nullopt, app.exit(e, out, err)};
    } catch (const CLI::CallForAllHelp& e) {
        return {std::nullopt, app.exit(e, out, err)};
    } catch (const CLI::CallForVersion& e) {
        return {std::nullopt, app.exit(e, out, err)};
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return {std::nullopt, kExitUsage};
    }
    return {c, kExitOk};
}

ConfigEntries config_entries(const CliConfig& c) {
    const RunConfig& r = c.run;
    const bool grid = c.subcommand == "sweep";
    ConfigEntries e;
    e.emplace_back("tool", std::string("qecsim ") + kVersion);
    e.emplace_back("subcommand", c.subcommand);
    e.emplace_back("sequence", r.sequence);
    e.emplace_back("composite_order", r.reverse_composites ? "operator-product" : "left-to-right");
    e.emplace_back("orders", join_orders(c));
    e.emplace_back("methods", join_methods(c));
    e.emplace_back("px", grid ? "grid {1e-10 1e-8 1e-6 1e-4}, fastest" : format_number(r.env.probs.px));
    e.emplace_back("py", grid ? "grid {1e-10 1e-8 1e-6 1e-4}" : format_number(r.env.probs.py));
    e.emplace_back("pz", format_number(r.env.probs.pz));
    e.emplace_back("mode", r.truncation.mode == SimMode::MonteCarlo ? "mc" : "enumerate");
    e.emplace_back("trunc_weight", r.truncation.max_weight ? std::to_string(*r.truncation.max_weight) : "full");
    e.emplace_back("samples", std::to_string(r.truncation.samples));
    e.emplace_back("seed", std::to_string(r.truncation.seed));
    e.emplace_back("theta_prep", r.noisy_theta ? "noisy" : "noiseless");
    e.emplace_back("rounds", r.single_set ? "single-set" : "two-set");
    e.emplace_back("initial_state", "noiseless |0_L>");
    e.emplace_back("logical_s_gate", gate_name(steane::logical_s_gate()));
    e.emplace_back("generator_readout", "sequential");
    e.emplace_back("t_readout", "syndrome-corrected parity");
    return e;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const ParseOutcome parsed = parse_args(args, out, err);
    if (!parsed.config) return parsed.exit_code;
    const CliConfig& c = *parsed.config;
    try {
        if (c.subcommand == "self-test") return do_self_test(out);
        if (c.subcommand == "render") return do_render(c, err);
        if (c.subcommand == "compare-orders") return do_compare(c, out, err);
        std::vector<RunResult> results;
        if (c.subcommand == "run") {
            results.push_back(run(c.run));
        } else {
            results = sweep(c.run, environment_grid(c.run.env.probs.pz), orders_of(c), methods_of(c), c.workers);
        }
        return emit(c, to_rows(results), out, err, true);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace qecsim::cli
