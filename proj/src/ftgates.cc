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

#include "qecsim/ftgates.h"

#include <algorithm>
#include <stdexcept>

#include "qecsim/ancilla.h"
#include "qecsim/steane_code.h"

namespace qecsim {

std::string logical_gate_name(LogicalGate g) {
    switch (g) {
        case LogicalGate::H: return "H";
        case LogicalGate::S: return "S";
        case LogicalGate::T: return "T";
    }
    return "?";
}

std::vector<LogicalGate> expand_sequence(std::string_view sequence, bool reverse_composites) {
    std::vector<LogicalGate> out;
    for (char c : sequence) {
        std::vector<LogicalGate> letter;
        if (c == 'A' || c == 'a') {
            letter = {LogicalGate::H, LogicalGate::S, LogicalGate::T};
        } else if (c == 'B' || c == 'b') {
            letter = {LogicalGate::H, LogicalGate::T};
        } else {
            throw std::invalid_argument(std::string("sequence letter '") + c + "' is not A or B");
        }
        if (reverse_composites) std::reverse(letter.begin(), letter.end());
        out.insert(out.end(), letter.begin(), letter.end());
    }
    return out;
}

void append_clifford(Circuit& circuit, const std::vector<Wire>& data, LogicalGate gate) {
    switch (gate) {
        case LogicalGate::H:
            circuit.append(steane::transversal(GateKind::H, data));
            return;
        case LogicalGate::S:
            circuit.append(steane::transversal(steane::logical_s_gate(), data));
            return;
        case LogicalGate::T:
            break;
    }
    throw std::invalid_argument("T is not a bitwise Clifford gate");
}

std::vector<Wire> append_t(Circuit& circuit, const std::vector<Wire>& data, WireAllocator& alloc,
                           const TOptions& options) {
    if (data.size() != steane::kBlockSize) throw std::invalid_argument("T gate needs a 7-wire data block");
    const auto theta = alloc.take(steane::kBlockSize);
    circuit.ops.emplace_back(PrepareOp{theta_circuit(), theta, options.noisy_theta});
    circuit.append(steane::transversal_cnot(theta, data));
    for (int i = 0; i < steane::kBlockSize; ++i) circuit.measure(data[i], Basis::Z, i);
    ClassicalOp readout;
    readout.label = "t-readout";
    readout.decode = [](Record r) {
        return static_cast<std::uint64_t>(steane::logical_measure_z(static_cast<std::uint8_t>(r & 0x7f)));
    };
    if (options.postselect) {
        readout.accept = [](std::uint64_t v) { return v == 0; };
    } else {
        readout.correct = [theta](std::uint64_t v) {
            std::vector<GateOp> gates;
            if (v == 0) return gates;
            for (Wire w : theta) gates.push_back({GateKind::X, w, -1, false});
            for (Wire w : theta) gates.push_back({steane::logical_s_gate(), w, -1, false});
            return gates;
        };
    }
    circuit.ops.emplace_back(std::move(readout));
    for (Wire w : data) circuit.discard(w);
    return theta;
}

void apply_logical(PureState& qubit, LogicalGate gate) {
    const GateKind kind = gate == LogicalGate::H ? GateKind::H : (gate == LogicalGate::S ? GateKind::S : GateKind::T);
    apply_gate(qubit, {kind, 0});
}

}  // namespace qecsim
