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

// Direct state-vector execution of a circuit under one explicit error
// pattern. Every measurement outcome becomes its own weighted branch. This
// is the slow, literal path; tests use it as the oracle for the frame
// ensemble engine.

#ifndef QECSIM_DENSE_EXECUTOR_H
#define QECSIM_DENSE_EXECUTOR_H

#include <cstdint>
#include <vector>

#include "qecsim/circuit.h"
#include "qecsim/noise.h"
#include "qecsim/state.h"

namespace qecsim {

struct DenseBranch {
    PureState state;
    double weight = 1.0;
    Record record = 0;
    /// Decoded value of every ClassicalOp passed, in order.
    std::vector<std::uint64_t> history;
};

struct DenseRun {
    std::vector<Wire> wires;  // register position -> wire
    std::vector<DenseBranch> branches;
    double rejected_mass = 0.0;

    static DenseRun from_state(PureState state, std::vector<Wire> wires);
    int position(Wire wire) const;
    double total_weight() const;
    /// The branch state with qubits reordered to `order`.
    PureState state_in_order(const DenseBranch& branch, const std::vector<Wire>& order) const;
};

/// Runs the circuit, injecting the pattern's events. Event site indices refer
/// to enumerate_fault_sites(circuit).
void execute_dense(const Circuit& circuit, DenseRun& run, const ErrorPattern& pattern = {});

struct DenseEstimate {
    double accepted_mass = 0.0;
    double fidelity = 0.0;
    double residual = 0.0;
    std::size_t patterns = 0;
};

/// Sum over every pattern of weight <= max_weight of the accepted mass and
/// of mass times |<ideal|psi>|^2, with `ideal` given over circuit.outputs.
DenseEstimate enumerate_dense(const Circuit& circuit, const DenseRun& initial, const PureState& ideal,
                              const ErrorProbabilities& probs, int max_weight);

}  // namespace qecsim

#endif  // QECSIM_DENSE_EXECUTOR_H
