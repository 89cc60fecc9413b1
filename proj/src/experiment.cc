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

#include "qecsim/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qecsim/steane_code.h"

namespace qecsim {

namespace {

std::shared_ptr<const Circuit> initial_zero_circuit() {
    static const auto c = [] {
        Circuit z;
        z.name = "initial-zero";
        for (Wire w = 0; w < steane::kBlockSize; ++w) z.init(w);
        z.outputs = {0, 1, 2, 3, 4, 5, 6};
        z.append(steane::encoder_gates(z.outputs));
        return std::make_shared<const Circuit>(std::move(z));
    }();
    return c;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::vector<Environment> environment_grid(double pz) {
    static constexpr double kLevels[] = {1e-10, 1e-8, 1e-6, 1e-4};
    std::vector<Environment> out;
    int index = 1;
    for (double py : kLevels) {
        for (double px : kLevels) out.push_back({index++, {px, py, pz}});
    }
    return out;
}

double log_infidelity(double fidelity) { return log_infidelity_of(1.0 - fidelity); }

double log_infidelity_of(double infidelity) {
    if (!(infidelity > 0.0)) return kLogInfidelityCap;
    return std::min(kLogInfidelityCap, -std::log10(infidelity));
}

Circuit build_circuit(const std::vector<LogicalGate>& primitives, const RunConfig& config,
                      std::vector<Wire>* data_out) {
    Circuit c;
    c.name = "experiment";
    WireAllocator alloc;
    std::vector<Wire> data = alloc.take(steane::kBlockSize);
    c.ops.emplace_back(PrepareOp{initial_zero_circuit(), data, false});
    const RoundOptions round{config.method, true, config.single_set};
    for (LogicalGate g : primitives) {
        if (g == LogicalGate::T) {
            data = append_t(c, data, alloc, {true, config.noisy_theta});
        } else {
            append_clifford(c, data, g);
        }
        append_qec_round(c, data, config.order, round, alloc);
    }
    c.outputs = data;
    if (data_out) *data_out = data;
    return c;
}

PureState ideal_output(const std::vector<LogicalGate>& primitives) {
    PureState q(1);
    for (LogicalGate g : primitives) apply_logical(q, g);
    return steane::encode(q);
}

RunResult run_primitives(const std::vector<LogicalGate>& primitives, const RunConfig& config) {
    config.env.probs.validate();
    std::vector<Wire> data;
    const Circuit circuit = build_circuit(primitives, config, &data);
    RunResult r;
    r.config = config;
    r.primitives = primitives.size();
    r.fault_sites = count_fault_sites(circuit);

    EnsembleSimulator sim(config.env.probs, config.truncation);
    Ensemble ens = sim.initial();
    sim.run(circuit, ens);
    const FidelityEstimate est = sim.fidelity(ens, ideal_output(primitives), data);
    r.fidelity = std::clamp(est.fidelity, 0.0, 1.0);
    r.infidelity = std::clamp(est.infidelity, 0.0, 1.0);
    r.log_infidelity = log_infidelity_of(r.infidelity);
    r.accepted_mass = est.accepted_mass;
    r.standard_error = est.standard_error;
    r.peak_frames = sim.peak_frames();
    if (config.truncation.mode == SimMode::MonteCarlo) {
        r.residual_bound = est.standard_error;
    } else if (config.truncation.max_weight) {
        const double tail = binomial_tail(r.fault_sites, config.env.probs.total(), *config.truncation.max_weight);
        r.residual_bound = tail == 0.0 ? 0.0 : (r.accepted_mass > 0.0 ? tail / r.accepted_mass : 1.0);
    }

    auto& m = r.metadata;
    m["sequence"] = config.sequence;
    m["composite_order"] = config.reverse_composites ? "operator-product" : "left-to-right";
    m["logical_s_gate"] = gate_name(steane::logical_s_gate());
    m["generator_readout"] = "sequential";
    m["t_readout"] = "syndrome-corrected parity";
    m["initial_state"] = "noiseless |0_L>";
    m["theta_prep"] = config.noisy_theta ? "noisy" : "noiseless";
    m["rounds"] = config.single_set ? "single-set" : "two-set";
    m["mode"] = config.truncation.mode == SimMode::MonteCarlo ? "mc" : "enumerate";
    m["trunc_weight"] = config.truncation.max_weight ? std::to_string(*config.truncation.max_weight) : "full";
    m["samples"] = std::to_string(config.truncation.samples);
    m["seed"] = std::to_string(config.truncation.seed);
    m["pz"] = fmt(config.env.probs.pz);
    return r;
}

RunResult run(const RunConfig& config) {
    return run_primitives(expand_sequence(config.sequence, config.reverse_composites), config);
}

bool order_outranks(double log_infidelity_a, double fidelity_a, double log_infidelity_b, double fidelity_b) {
    if (log_infidelity_a != log_infidelity_b) return log_infidelity_a > log_infidelity_b;
    return fidelity_a > fidelity_b;
}

SyndromeOrder best_order(const std::vector<RunResult>& results) {
    if (results.empty()) throw std::invalid_argument("no results to rank");
    const RunResult* best = &results.front();
    for (const auto& r : results) {
        if (order_outranks(r.log_infidelity, r.fidelity, best->log_infidelity, best->fidelity)) best = &r;
    }
    return best->config.order;
}

OrderComparison compare_orders(const RunConfig& base) {
    OrderComparison out;
    out.env = base.env;
    out.method = base.method;
    for (auto order : all_orders()) {
        RunConfig c = base;
        c.order = order;
        out.results.push_back(run(c));
    }
    out.best = best_order(out.results);
    return out;
}

DMetric d_metric(const RunResult& steane, const RunResult& shor) {
    DMetric d;
    const double diff = steane.log_infidelity - shor.log_infidelity;
    d.value = std::abs(diff);
    d.steane_wins = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
    return d;
}

std::vector<RunResult> sweep(const RunConfig& base, const std::vector<Environment>& envs,
                             const std::vector<SyndromeOrder>& orders, const std::vector<SMethod>& methods,
                             int workers) {
    std::vector<RunConfig> cells;
    for (const auto& env : envs) {
        for (auto method : methods) {
            for (auto order : orders) {
                RunConfig c = base;
                c.env = env;
                c.order = order;
                c.method = method;
                cells.push_back(c);
            }
        }
    }
    std::vector<RunResult> results(cells.size());
    if (workers <= 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) results[i] = run(cells[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                results[i] = run(cells[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace qecsim
