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

#include "qecsim/dense_executor.h"

#include <algorithm>
#include <stdexcept>

#include "overloaded.h"

namespace qecsim {

using internal::Overloaded;

namespace {

constexpr double kSameState = 1.0 - 1e-9;

struct Injection {
    Wire wire;
    Pauli pauli;
};

void merge_branches(std::vector<DenseBranch>& branches) {
    std::vector<DenseBranch> merged;
    for (auto& b : branches) {
        bool absorbed = false;
        for (auto& m : merged) {
            if (m.record == b.record && m.history == b.history && overlap_sq(m.state, b.state) > kSameState) {
                m.weight += b.weight;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(std::move(b));
    }
    branches = std::move(merged);
}

}  // namespace

DenseRun DenseRun::from_state(PureState state, std::vector<Wire> wires) {
    if (static_cast<int>(wires.size()) != state.num_qubits()) {
        throw std::invalid_argument("wire list does not match register size");
    }
    DenseRun run;
    run.wires = std::move(wires);
    run.branches.push_back({std::move(state), 1.0, 0, {}});
    return run;
}

int DenseRun::position(Wire wire) const {
    auto it = std::find(wires.begin(), wires.end(), wire);
    if (it == wires.end()) {
        throw std::logic_error("wire " + std::to_string(wire) + " is not live in the register");
    }
    return static_cast<int>(it - wires.begin());
}

double DenseRun::total_weight() const {
    double total = 0.0;
    for (const auto& b : branches) total += b.weight;
    return total;
}

PureState DenseRun::state_in_order(const DenseBranch& branch, const std::vector<Wire>& order) const {
    std::vector<int> positions;
    for (Wire w : order) positions.push_back(position(w));
    return permute_qubits(branch.state, positions);
}

void execute_dense(const Circuit& circuit, DenseRun& run, const ErrorPattern& pattern) {
    const Circuit flat = flatten(circuit);
    const auto sites = enumerate_fault_sites(circuit);
    std::vector<std::vector<Injection>> injections(flat.ops.size());
    for (const auto& e : pattern.events) {
        if (e.site >= sites.size()) throw std::out_of_range("fault event names a site past the circuit");
        injections[sites[e.site].op_index].push_back({sites[e.site].wire, e.pauli});
    }
    auto inject = [&](std::size_t op_index) {
        for (const auto& inj : injections[op_index]) {
            const int pos = run.position(inj.wire);
            for (auto& b : run.branches) apply_fault(b.state, pos, inj.pauli);
        }
    };

    for (std::size_t i = 0; i < flat.ops.size(); ++i) {
        std::visit(Overloaded{
                       [&](const GateOp& g) {
                           const Gate gate{g.kind, run.position(g.wire),
                                           g.kind == GateKind::CNOT ? run.position(g.target) : -1};
                           for (auto& b : run.branches) apply_gate(b.state, gate);
                           inject(i);
                       },
                       [&](const InitOp& op) {
                           if (std::find(run.wires.begin(), run.wires.end(), op.wire) != run.wires.end()) {
                               throw std::logic_error("init of a live wire " + std::to_string(op.wire));
                           }
                           const int pos = static_cast<int>(run.wires.size());
                           run.wires.push_back(op.wire);
                           for (auto& b : run.branches) {
                               b.state = tensor(b.state, PureState(1));
                               if (op.state == InitState::Plus) apply_gate(b.state, {GateKind::H, pos});
                           }
                           inject(i);
                       },
                       [&](const MeasureOp& m) {
                           inject(i);
                           const int pos = run.position(m.wire);
                           std::vector<DenseBranch> next;
                           for (auto& b : run.branches) {
                               for (int outcome = 0; outcome < 2; ++outcome) {
                                   auto proj = project(b.state, pos, m.basis, outcome);
                                   if (!proj.state) continue;
                                   DenseBranch child{std::move(*proj.state), b.weight * proj.probability, b.record,
                                                     b.history};
                                   if (outcome) child.record |= Record{1} << m.slot;
                                   next.push_back(std::move(child));
                               }
                           }
                           run.branches = std::move(next);
                       },
                       [&](const DiscardOp& d) {
                           const int pos = run.position(d.wire);
                           for (auto& b : run.branches) b.state = discard(b.state, pos);
                           run.wires.erase(run.wires.begin() + pos);
                       },
                       [&](const ClassicalOp& c) {
                           if (c.fold) {
                               for (auto& b : run.branches) b.record = c.decode(b.record);
                               merge_branches(run.branches);
                               return;
                           }
                           std::vector<DenseBranch> kept;
                           for (auto& b : run.branches) {
                               const std::uint64_t value = c.decode ? c.decode(b.record) : b.record;
                               if (c.accept && !c.accept(value)) {
                                   run.rejected_mass += b.weight;
                                   continue;
                               }
                               if (c.correct) {
                                   for (const auto& g : c.correct(value)) {
                                       apply_gate(b.state, {g.kind, run.position(g.wire),
                                                            g.kind == GateKind::CNOT ? run.position(g.target) : -1});
                                   }
                               }
                               b.record &= ~c.scope;
                               b.history.push_back(value);
                               kept.push_back(std::move(b));
                           }
                           run.branches = std::move(kept);
                           merge_branches(run.branches);
                       },
                       [](const PrepareOp&) { throw std::logic_error("flattened circuit still holds a prepare op"); },
                   },
                   flat.ops[i]);
    }
}

DenseEstimate enumerate_dense(const Circuit& circuit, const DenseRun& initial, const PureState& ideal,
                              const ErrorProbabilities& probs, int max_weight) {
    const auto sites = enumerate_fault_sites(circuit);
    const auto set = enumerate_patterns(sites.size(), probs, max_weight);
    DenseEstimate out;
    out.residual = set.residual;
    out.patterns = set.patterns.size();
    double numerator = 0.0;
    for (const auto& pattern : set.patterns) {
        if (pattern.weight == 0.0) continue;
        DenseRun run = initial;
        execute_dense(circuit, run, pattern);
        for (const auto& b : run.branches) {
            const double w = pattern.weight * b.weight;
            out.accepted_mass += w;
            numerator += w * overlap_sq(ideal, run.state_in_order(b, circuit.outputs));
        }
    }
    out.fidelity = out.accepted_mass > 0.0 ? numerator / out.accepted_mass : 0.0;
    return out;
}

}  // namespace qecsim
