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

#ifndef QECSIM_SYNDROME_H
#define QECSIM_SYNDROME_H

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qecsim/circuit.h"
#include "qecsim/steane_code.h"

namespace qecsim {

/// Letters name the error type a block looks for: X reads the bit-flip
/// syndrome, Z the phase-flip syndrome.
enum class SyndromeOrder { XZXZ, XZZX, ZXXZ, ZXZX };
enum class SMethod { Shor, Steane };

std::string order_name(SyndromeOrder order);
std::string method_name(SMethod method);
std::optional<SyndromeOrder> parse_order(std::string_view text);
std::optional<SMethod> parse_method(std::string_view text);
const std::array<SyndromeOrder, 4>& all_orders();
std::array<steane::SyndromeKind, 4> order_blocks(SyndromeOrder order);

struct RoundOptions {
    SMethod method = SMethod::Shor;
    /// Reject any nontrivial syndrome. Otherwise decode and apply recovery.
    bool postselect = true;
    /// One block of each kind, in order of first appearance.
    bool single_set = false;
};

/// Appends one syndrome-measurement block on the 7 data wires. Ancilla
/// wires come from `alloc`.
void append_sm_block(Circuit& circuit, const std::vector<Wire>& data, steane::SyndromeKind kind,
                     const RoundOptions& options, WireAllocator& alloc);

void append_qec_round(Circuit& circuit, const std::vector<Wire>& data, SyndromeOrder order,
                      const RoundOptions& options, WireAllocator& alloc);

/// Fault sites in one block and one round.
std::uint64_t block_fault_sites(SMethod method);
std::uint64_t round_fault_sites(SMethod method, bool single_set = false);

}  // namespace qecsim

#endif  // QECSIM_SYNDROME_H
