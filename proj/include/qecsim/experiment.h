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

#ifndef QECSIM_EXPERIMENT_H
#define QECSIM_EXPERIMENT_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qecsim/frame_ensemble.h"
#include "qecsim/ftgates.h"
#include "qecsim/noise.h"
#include "qecsim/syndrome.h"

namespace qecsim {

inline constexpr const char* kFullSequence = "ABBBAAAABBABABABBBAA";
inline constexpr const char* kDeskSequence = "ABBB";
inline constexpr double kLogInfidelityCap = 15.0;

struct Environment {
    int grid_index = 1;
    ErrorProbabilities probs;
};

/// The 16 environments: (px, py) over {1e-10, 1e-8, 1e-6, 1e-4}, px fastest.
std::vector<Environment> environment_grid(double pz = 1e-10);

struct RunConfig {
    std::string sequence = kDeskSequence;
    SyndromeOrder order = SyndromeOrder::ZXXZ;
    SMethod method = SMethod::Shor;
    Environment env{1, {1e-10, 1e-10, 1e-10}};
    TruncationConfig truncation;
    bool noisy_theta = true;
    bool reverse_composites = false;
    bool single_set = false;
};

struct RunResult {
    RunConfig config;
    double fidelity = 0.0;
    double infidelity = 1.0;
    double log_infidelity = 0.0;
    double accepted_mass = 0.0;
    /// Enumerate mode: bound on |F - F_exact| from the unfollowed fault
    /// patterns. MonteCarlo mode: the standard error.
    double residual_bound = 0.0;
    double standard_error = 0.0;
    std::uint64_t fault_sites = 0;
    std::size_t primitives = 0;
    std::size_t peak_frames = 0;
    std::map<std::string, std::string> metadata;
};

/// -log10(1 - F), capped at 15.
double log_infidelity(double fidelity);
double log_infidelity_of(double infidelity);

/// The noisy circuit for a primitive list: noiseless |0_L>, then each
/// primitive followed by one QEC round. `data_out` receives the final block.
Circuit build_circuit(const std::vector<LogicalGate>& primitives, const RunConfig& config,
                      std::vector<Wire>* data_out);

/// Ideal encoded output of the primitives applied to |0>.
PureState ideal_output(const std::vector<LogicalGate>& primitives);

RunResult run_primitives(const std::vector<LogicalGate>& primitives, const RunConfig& config);
RunResult run(const RunConfig& config);

struct OrderComparison {
    Environment env;
    SMethod method = SMethod::Shor;
    std::vector<RunResult> results;  // in all_orders() order
    SyndromeOrder best = SyndromeOrder::XZXZ;
};

/// True when result a strictly beats result b: higher log-infidelity, then
/// higher fidelity. Shared by the order ranking and the chart highlight.
bool order_outranks(double log_infidelity_a, double fidelity_a, double log_infidelity_b, double fidelity_b);

/// Best = highest log-infidelity; exact ties go to the earlier order.
SyndromeOrder best_order(const std::vector<RunResult>& results);
OrderComparison compare_orders(const RunConfig& base);

struct DMetric {
    double value = 0.0;
    /// +1 when Steane has the higher log-infidelity (better), -1 for Shor, 0 on a tie.
    int steane_wins = 0;
};

DMetric d_metric(const RunResult& steane, const RunResult& shor);

/// Every environment x order x method, grid index outermost. `workers` > 1
/// runs cells on that many threads; results are identical either way.
std::vector<RunResult> sweep(const RunConfig& base, const std::vector<Environment>& envs,
                             const std::vector<SyndromeOrder>& orders, const std::vector<SMethod>& methods,
                             int workers = 1);

}  // namespace qecsim

#endif  // QECSIM_EXPERIMENT_H
