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

// The [[7,1,3]] code. Qubit sets are 7-bit masks, bit i standing for block
// qubit i+1.

#ifndef QECSIM_STEANE_CODE_H
#define QECSIM_STEANE_CODE_H

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qecsim/circuit.h"
#include "qecsim/noise.h"
#include "qecsim/pauli_frame.h"
#include "qecsim/state.h"

namespace qecsim::steane {

inline constexpr int kBlockSize = 7;

struct CodeSpec {
    std::array<std::uint8_t, 3> x_supports;
    std::array<std::uint8_t, 3> z_supports;
    std::uint8_t logical_x;
    std::uint8_t logical_z;

    /// Supports {4,5,6,7}, {2,3,6,7}, {1,3,5,7} for both types; logical
    /// operators on all seven qubits.
    static const CodeSpec& standard();
};

/// Bit-flip syndromes come from the Z-type generators, phase-flip syndromes
/// from the X-type ones.
enum class SyndromeKind { BitFlip, PhaseFlip };

const char* kind_name(SyndromeKind kind);

/// Bit k of the result is the parity of `error_mask` over generator k.
std::uint8_t syndrome_of(std::uint8_t error_mask, SyndromeKind kind, const CodeSpec& spec = CodeSpec::standard());

/// Syndrome to qubit (0-based), built by exhaustive search over single-qubit
/// errors.
class DecodeTable {
  public:
    DecodeTable(const CodeSpec& spec, SyndromeKind kind);
    static const DecodeTable& standard(SyndromeKind kind);

    std::optional<int> qubit(std::uint8_t syndrome) const { return table_.at(syndrome & 7); }

  private:
    std::array<std::optional<int>, 8> table_;
};

struct Recovery {
    Pauli pauli;
    int qubit;  // 0-based
};

std::optional<Recovery> decode_syndrome(std::uint8_t syndrome, SyndromeKind kind);

/// X-type generators followed by Z-type generators, over positions 0..6.
std::vector<PauliMask> generators(const CodeSpec& spec = CodeSpec::standard());
PauliMask logical_x(const CodeSpec& spec = CodeSpec::standard());
PauliMask logical_z(const CodeSpec& spec = CodeSpec::standard());

/// The 8 members of the span of the X-type supports.
std::vector<std::uint8_t> even_codewords(const CodeSpec& spec = CodeSpec::standard());

/// Encoder with the input on block[0] and block[1..6] in |0>: three
/// Hadamards and eleven CNOTs.
std::vector<GateOp> encoder_gates(const std::vector<Wire>& block);

std::vector<GateOp> transversal(GateKind kind, const std::vector<Wire>& block);
std::vector<GateOp> transversal_cnot(const std::vector<Wire>& control, const std::vector<Wire>& target);

/// The single-qubit gate whose bitwise layer acts as logical S. Found once by
/// checking both candidates against the reference states.
GateKind logical_s_gate();

/// Logical value of a 7-bit Z readout after single-error correction.
int logical_measure_z(std::uint8_t bits);

std::vector<GateOp> recovery_gates(const Recovery& r, const std::vector<Wire>& block);

/// Reference states built from the codeword lists, independent of the
/// encoder circuit.
PureState zero_l();
PureState one_l();
PureState plus_l();
PureState theta_l();
/// a|0_L> + b|1_L>, from a 1-qubit state.
PureState encode(const PureState& logical);

}  // namespace qecsim::steane

#endif  // QECSIM_STEANE_CODE_H
