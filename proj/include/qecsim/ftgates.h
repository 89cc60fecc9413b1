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

#ifndef QECSIM_FTGATES_H
#define QECSIM_FTGATES_H

#include <string>
#include <string_view>
#include <vector>

#include "qecsim/circuit.h"
#include "qecsim/state.h"

namespace qecsim {

enum class LogicalGate { H, S, T };

std::string logical_gate_name(LogicalGate g);

/// A = H, S, T and B = H, T. Letters are applied left to right; with
/// `reverse_composites` each letter's gates run in operator-product order
/// instead (A = T, S, H). Throws std::invalid_argument on any other letter.
std::vector<LogicalGate> expand_sequence(std::string_view sequence, bool reverse_composites = false);

/// Bitwise H or logical S layer on a 7-wire block.
void append_clifford(Circuit& circuit, const std::vector<Wire>& data, LogicalGate gate);

struct TOptions {
    bool postselect = true;
    bool noisy_theta = true;
};

/// T by magic-state injection. The data block is consumed and the returned
/// block, which held the magic state, carries the result. Without
/// postselection, outcome 1 is fixed up by logical X then logical S; that
/// fix-up is not a Pauli and only the dense executor can run it.
std::vector<Wire> append_t(Circuit& circuit, const std::vector<Wire>& data, WireAllocator& alloc,
                           const TOptions& options = {});

/// Ideal single-qubit action of a primitive.
void apply_logical(PureState& qubit, LogicalGate gate);

}  // namespace qecsim

#endif  // QECSIM_FTGATES_H
