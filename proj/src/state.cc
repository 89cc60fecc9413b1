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

#include "qecsim/state.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qecsim {

namespace {

const Amplitude kI{0.0, 1.0};
const Amplitude kEighthTurn = std::polar(1.0, std::numbers::pi / 4);

void check_qubit(const PureState& state, int qubit) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " outside register of " +
                                std::to_string(state.num_qubits()) + " qubits");
    }
}

// Applies the 2x2 matrix [[m00, m01], [m10, m11]] to one qubit.
void apply_single(PureState& state, int qubit, Amplitude m00, Amplitude m01, Amplitude m10, Amplitude m11) {
    const std::size_t bit = std::size_t{1} << qubit;
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const Amplitude a0 = amps[i];
        const Amplitude a1 = amps[i | bit];
        amps[i] = m00 * a0 + m01 * a1;
        amps[i | bit] = m10 * a0 + m11 * a1;
    }
}

void apply_phase(PureState& state, int qubit, Amplitude phase) {
    const std::size_t bit = std::size_t{1} << qubit;
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) {
            amps[i] *= phase;
        }
    }
}

void apply(PureState& state, const Gate& gate, bool adjoint) {
    check_qubit(state, gate.qubit);
    const double r = std::numbers::sqrt2 / 2;
    switch (gate.kind) {
        case GateKind::H:
            apply_single(state, gate.qubit, r, r, r, -r);
            return;
        case GateKind::S:
            apply_phase(state, gate.qubit, adjoint ? -kI : kI);
            return;
        case GateKind::S_adj:
            apply_phase(state, gate.qubit, adjoint ? kI : -kI);
            return;
        case GateKind::T:
            apply_phase(state, gate.qubit, adjoint ? std::conj(kEighthTurn) : kEighthTurn);
            return;
        case GateKind::X:
            apply_single(state, gate.qubit, 0, 1, 1, 0);
            return;
        case GateKind::Y:
            apply_single(state, gate.qubit, 0, -kI, kI, 0);
            return;
        case GateKind::Z:
            apply_phase(state, gate.qubit, -1.0);
            return;
        case GateKind::CNOT: {
            check_qubit(state, gate.target);
            if (gate.target == gate.qubit) {
                throw std::invalid_argument("CNOT control and target must differ");
            }
            const std::size_t c = std::size_t{1} << gate.qubit;
            const std::size_t t = std::size_t{1} << gate.target;
            auto amps = state.amplitudes();
            for (std::size_t i = 0; i < amps.size(); ++i) {
                if ((i & c) && !(i & t)) {
                    std::swap(amps[i], amps[i | t]);
                }
            }
            return;
        }
    }
}

}  // namespace

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::S_adj: return "S_adj";
        case GateKind::T: return "T";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::CNOT: return "CNOT";
    }
    return "?";
}

bool is_pauli(GateKind kind) {
    return kind == GateKind::X || kind == GateKind::Y || kind == GateKind::Z;
}

PureState::PureState(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0 || num_qubits > 30) {
        throw std::invalid_argument("register size out of range: " + std::to_string(num_qubits));
    }
    amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{});
    amplitudes_[0] = 1.0;
}

PureState PureState::basis_state(int num_qubits, std::uint64_t index) {
    PureState s(num_qubits);
    if (index >= s.size()) {
        throw std::out_of_range("basis index outside register");
    }
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

PureState PureState::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t n = amplitudes.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    PureState s(std::countr_zero(n));
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

double PureState::norm() const {
    double total = 0.0;
    for (const auto& a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void PureState::normalize() {
    const double n = norm();
    if (n == 0.0) {
        throw std::logic_error("cannot normalize the zero vector");
    }
    for (auto& a : amplitudes_) {
        a /= n;
    }
}

void apply_gate(PureState& state, const Gate& gate) { apply(state, gate, false); }

void apply_gate_adjoint(PureState& state, const Gate& gate) { apply(state, gate, true); }

PureState tensor(const PureState& low, const PureState& high) {
    PureState out(low.num_qubits() + high.num_qubits());
    const std::size_t low_size = low.size();
    for (std::size_t h = 0; h < high.size(); ++h) {
        for (std::size_t l = 0; l < low_size; ++l) {
            out[h * low_size + l] = low[l] * high[h];
        }
    }
    return out;
}

Projection project(const PureState& state, int qubit, Basis basis, int outcome) {
    check_qubit(state, qubit);
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("measurement outcome must be 0 or 1");
    }
    PureState work = state;
    if (basis == Basis::X) {
        apply_gate(work, {GateKind::H, qubit});
    }
    const std::size_t bit = std::size_t{1} << qubit;
    double prob = 0.0;
    auto amps = work.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (((i & bit) != 0) == (outcome == 1)) {
            prob += std::norm(amps[i]);
        } else {
            amps[i] = 0.0;
        }
    }
    Projection result;
    result.probability = prob;
    if (prob < kZeroProbability) {
        return result;
    }
    const double scale = 1.0 / std::sqrt(prob);
    for (auto& a : amps) {
        a *= scale;
    }
    if (basis == Basis::X) {
        apply_gate(work, {GateKind::H, qubit});
    }
    result.state = std::move(work);
    return result;
}

PureState discard(const PureState& state, int qubit) {
    check_qubit(state, qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    const std::size_t low_mask = bit - 1;
    // Factor the state as rest (x) (c0|0> + c1|1>). Pick the heavier slice as
    // the reference for the remaining qubits.
    double w0 = 0.0;
    double w1 = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        (i & bit ? w1 : w0) += std::norm(state[i]);
    }
    const bool use_one = w1 > w0;
    PureState out(state.num_qubits() - 1);
    for (std::size_t r = 0; r < out.size(); ++r) {
        const std::size_t full = (r & low_mask) | ((r & ~low_mask) << 1) | (use_one ? bit : 0);
        out[r] = state[full];
    }
    const double ref_norm = out.norm();
    if (ref_norm == 0.0) {
        throw std::logic_error("discard of a qubit from the zero vector");
    }
    // The other slice must be proportional to the reference slice.
    Amplitude ratio{};
    for (std::size_t r = 0; r < out.size(); ++r) {
        const std::size_t full = (r & low_mask) | ((r & ~low_mask) << 1) | (use_one ? 0 : bit);
        ratio += std::conj(out[r]) * state[full];
    }
    ratio /= ref_norm * ref_norm;
    double residual = 0.0;
    for (std::size_t r = 0; r < out.size(); ++r) {
        const std::size_t full = (r & low_mask) | ((r & ~low_mask) << 1) | (use_one ? 0 : bit);
        residual += std::norm(state[full] - ratio * out[r]);
    }
    if (residual > 1e-18 + 1e-12 * state.norm()) {
        throw std::logic_error("discarding qubit " + std::to_string(qubit) + " that is entangled with the register");
    }
    for (std::size_t r = 0; r < out.size(); ++r) {
        out[r] /= ref_norm;
    }
    return out;
}

Amplitude inner_product(const PureState& a, const PureState& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("overlap of registers with " + std::to_string(a.num_qubits()) + " and " +
                                    std::to_string(b.num_qubits()) + " qubits");
    }
    Amplitude total{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

double overlap_sq(const PureState& a, const PureState& b) { return std::norm(inner_product(a, b)); }

PureState permute_qubits(const PureState& state, std::span<const int> order) {
    const int n = state.num_qubits();
    if (static_cast<int>(order.size()) != n) {
        throw std::invalid_argument("permutation size does not match register");
    }
    PureState out(n);
    for (std::size_t i = 0; i < state.size(); ++i) {
        std::size_t src = 0;
        for (int q = 0; q < n; ++q) {
            if (i >> q & 1) {
                src |= std::size_t{1} << order[q];
            }
        }
        out[i] = state[src];
    }
    return out;
}

}  // namespace qecsim
