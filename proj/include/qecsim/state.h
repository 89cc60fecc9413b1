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

#ifndef QECSIM_STATE_H
#define QECSIM_STATE_H

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qecsim {

using Amplitude = std::complex<double>;

/// Qubit q of a register is bit q of the amplitude index (qubit 0 is the
/// least significant bit). Every module relies on this.
enum class GateKind { H, S, S_adj, T, X, Y, Z, CNOT };

std::string gate_name(GateKind kind);
bool is_pauli(GateKind kind);

/// A gate bound to register positions. `target` is only used by CNOT.
struct Gate {
    GateKind kind;
    int qubit;
    int target = -1;
};

enum class Basis { Z, X };

/// Dense pure state over `num_qubits` qubits.
class PureState {
  public:
    PureState() : PureState(0) {}
    explicit PureState(int num_qubits);

    static PureState basis_state(int num_qubits, std::uint64_t index);
    static PureState from_amplitudes(std::vector<Amplitude> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    std::span<Amplitude> amplitudes() { return amplitudes_; }
    const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }
    Amplitude& operator[](std::size_t i) { return amplitudes_[i]; }

    double norm() const;
    void normalize();

  private:
    int num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Applies the gate in place. Throws std::out_of_range on a bad qubit index
/// and std::invalid_argument when CNOT control equals target.
void apply_gate(PureState& state, const Gate& gate);
void apply_gate_adjoint(PureState& state, const Gate& gate);

/// Kronecker product; `low` occupies qubits [0, low.num_qubits()).
PureState tensor(const PureState& low, const PureState& high);

struct Projection {
    double probability = 0.0;
    /// Empty when the outcome has probability below 1e-15.
    std::optional<PureState> state;
};

inline constexpr double kZeroProbability = 1e-15;

/// Born-rule projection onto `outcome` of `qubit` measured in `basis`.
/// The X basis is handled as H, Z projection, H.
Projection project(const PureState& state, int qubit, Basis basis, int outcome);

/// Removes a qubit that is in a product state with the rest of the register.
/// Throws std::logic_error when the qubit is entangled.
PureState discard(const PureState& state, int qubit);

/// |<a|b>|^2. Throws std::invalid_argument on mismatched register sizes.
double overlap_sq(const PureState& a, const PureState& b);
Amplitude inner_product(const PureState& a, const PureState& b);

/// Reorders qubits: qubit i of the result is qubit `order[i]` of `state`.
PureState permute_qubits(const PureState& state, std::span<const int> order);

}  // namespace qecsim

#endif  // QECSIM_STATE_H
