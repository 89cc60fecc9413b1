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

#ifndef QECSIM_PAULI_FRAME_H
#define QECSIM_PAULI_FRAME_H

#include <compare>
#include <cstdint>
#include <vector>

#include "qecsim/state.h"

namespace qecsim {

/// A Pauli operator up to phase, X^x Z^z over at most 32 register positions.
struct PauliMask {
    std::uint32_t x = 0;
    std::uint32_t z = 0;

    std::uint64_t packed() const { return x | (std::uint64_t{z} << 32); }
    static PauliMask unpack(std::uint64_t v) {
        return {static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v >> 32)};
    }
    PauliMask operator*(PauliMask o) const { return {x ^ o.x, z ^ o.z}; }
    bool is_identity() const { return x == 0 && z == 0; }
    auto operator<=>(const PauliMask&) const = default;
};

bool anticommute(PauliMask a, PauliMask b);

/// Conjugates the mask through a Clifford gate, ignoring phase. Pauli gates
/// leave it unchanged. T is rejected with std::invalid_argument.
PauliMask conjugate(PauliMask p, const Gate& gate);

/// Removes register position `q`; higher positions move down by one.
PauliMask remove_position(PauliMask p, int q);

/// Applies X^x Z^z to a dense state.
void apply_mask(PureState& state, PauliMask p);

/// <a| X^x Z^z |b>, up to the phase convention of apply_mask.
Amplitude masked_inner_product(const PureState& a, PauliMask p, const PureState& b);

/// A group of phase-free Pauli operators, each of which maps a reference
/// state to itself up to a phase. Rows are kept in reduced row echelon form
/// so that reduce() returns a canonical coset representative.
class StabilizerGroup {
  public:
    explicit StabilizerGroup(int num_qubits = 0) : num_qubits_(num_qubits) {}

    int num_qubits() const { return num_qubits_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    std::vector<PauliMask> generators() const;

    void add(PauliMask p);
    PauliMask reduce(PauliMask p) const;
    bool contains(PauliMask p) const { return reduce(p).is_identity(); }

    void conjugate(const Gate& gate);
    /// Keeps the subgroup commuting with `p`.
    void restrict_commuting(PauliMask p);
    /// Update for a projective measurement of the single-qubit observable `p`.
    void measure(PauliMask p);
    /// Adds a fresh register position at the top.
    void add_qubit() { ++num_qubits_; }
    void remove_qubit(int q);
    /// Direct product with `other` placed on positions above this group's.
    void append(const StabilizerGroup& other);

    bool operator==(const StabilizerGroup& o) const { return num_qubits_ == o.num_qubits_ && rows_ == o.rows_; }

  private:
    void rebuild(std::vector<std::uint64_t> rows);

    int num_qubits_;
    std::vector<std::uint64_t> rows_;  // sorted by pivot (lowest set bit)
};

}  // namespace qecsim

#endif  // QECSIM_PAULI_FRAME_H
