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

#ifndef QECSIM_CIRCUIT_H
#define QECSIM_CIRCUIT_H

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qecsim/state.h"

namespace qecsim {

/// Circuits address qubits by wire id. Executors map wires to register
/// positions; a wire comes into existence at its InitOp and leaves at its
/// DiscardOp.
using Wire = int;

/// Measurement outcomes of the current classical scope, bit `slot` per
/// MeasureOp. Cleared by every ClassicalOp.
using Record = std::uint64_t;

enum class InitState { Zero, Plus };

struct GateOp {
    GateKind kind;
    Wire wire;
    Wire target = -1;
    bool noisy = true;
};

struct InitOp {
    Wire wire;
    InitState state = InitState::Zero;
    bool noisy = true;
};

struct MeasureOp {
    Wire wire;
    Basis basis = Basis::Z;
    int slot = 0;
    bool noisy = true;
};

struct DiscardOp {
    Wire wire;
};

/// Classical processing of the measurement record: `decode` reduces the raw
/// record to an outcome value (syndrome, parity, logical bit); a branch is
/// kept iff `accept` (when set) returns true; `correct` (when set) returns
/// noiseless feed-forward gates. The record is cleared afterwards, unless
/// `fold` is set: then the record is replaced by the decoded value and
/// nothing else happens.
struct ClassicalOp {
    std::function<std::uint64_t(Record)> decode;
    std::function<bool(std::uint64_t)> accept;
    std::function<std::vector<GateOp>(std::uint64_t)> correct;
    std::string label;
    bool fold = false;
    /// Record bits cleared after a non-fold op. Flattening narrows it to the
    /// band given to an inlined preparation.
    Record scope = ~Record{0};
};

struct Circuit;

/// Runs an independent sub-circuit on fresh wires and hands its surviving
/// wires to the parent as `outputs` (in the sub-circuit's output order).
struct PrepareOp {
    std::shared_ptr<const Circuit> circuit;
    std::vector<Wire> outputs;
    bool noisy = true;
};

using CircuitOp = std::variant<GateOp, InitOp, MeasureOp, DiscardOp, ClassicalOp, PrepareOp>;

struct Circuit {
    std::string name;
    std::vector<Wire> inputs;
    std::vector<Wire> outputs;
    std::vector<CircuitOp> ops;

    void gate(GateKind kind, Wire wire) { ops.emplace_back(GateOp{kind, wire}); }
    void cnot(Wire control, Wire target) { ops.emplace_back(GateOp{GateKind::CNOT, control, target}); }
    void init(Wire wire, InitState state = InitState::Zero) { ops.emplace_back(InitOp{wire, state}); }
    void measure(Wire wire, Basis basis, int slot) { ops.emplace_back(MeasureOp{wire, basis, slot}); }
    void discard(Wire wire) { ops.emplace_back(DiscardOp{wire}); }
    void append(std::vector<GateOp> gates);
};

/// Hands out wire ids that are unique within one circuit tree.
class WireAllocator {
  public:
    explicit WireAllocator(Wire next = 0) : next_(next) {}
    Wire next() { return next_++; }
    std::vector<Wire> take(int count);

  private:
    Wire next_;
};

/// Inlines every PrepareOp, renaming sub-circuit wires to fresh ids above
/// every id used by the parent. Noiseless preparations mark their ops
/// noiseless. Each preparation keeps its own 16-bit band of the record.
/// The result contains no PrepareOp.
Circuit flatten(const Circuit& circuit);

/// Number of (operation, participating qubit) fault sites, counting nested
/// preparations once per use.
std::uint64_t count_fault_sites(const Circuit& circuit);

/// Highest wire id referenced by the circuit (including inputs/outputs), or -1.
Wire max_wire(const Circuit& circuit);

std::string describe(const CircuitOp& op);

}  // namespace qecsim

#endif  // QECSIM_CIRCUIT_H
