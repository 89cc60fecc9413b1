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

#include "qecsim/steane_code.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qecsim::steane {

namespace {

int parity(unsigned v) { return std::popcount(v) & 1; }

void check_block(const std::vector<Wire>& block) {
    if (block.size() != kBlockSize) throw std::invalid_argument("code block must have 7 wires");
}

}  // namespace

const CodeSpec& CodeSpec::standard() {
    static const CodeSpec spec{{0b1111000, 0b1100110, 0b1010101}, {0b1111000, 0b1100110, 0b1010101}, 0x7f, 0x7f};
    return spec;
}

const char* kind_name(SyndromeKind kind) { return kind == SyndromeKind::BitFlip ? "bitflip" : "phaseflip"; }

std::uint8_t syndrome_of(std::uint8_t error_mask, SyndromeKind kind, const CodeSpec& spec) {
    const auto& supports = kind == SyndromeKind::BitFlip ? spec.z_supports : spec.x_supports;
    std::uint8_t s = 0;
    for (int k = 0; k < 3; ++k) s |= parity(error_mask & supports[k]) << k;
    return s;
}

DecodeTable::DecodeTable(const CodeSpec& spec, SyndromeKind kind) {
    for (int q = 0; q < kBlockSize; ++q) {
        const std::uint8_t s = syndrome_of(1u << q, kind, spec);
        if (s == 0 || table_[s]) throw std::logic_error("generator supports do not locate single-qubit errors");
        table_[s] = q;
    }
}

const DecodeTable& DecodeTable::standard(SyndromeKind kind) {
    static const DecodeTable bit(CodeSpec::standard(), SyndromeKind::BitFlip);
    static const DecodeTable phase(CodeSpec::standard(), SyndromeKind::PhaseFlip);
    return kind == SyndromeKind::BitFlip ? bit : phase;
}

std::optional<Recovery> decode_syndrome(std::uint8_t syndrome, SyndromeKind kind) {
    const auto q = DecodeTable::standard(kind).qubit(syndrome);
    if (!q) return std::nullopt;
    return Recovery{kind == SyndromeKind::BitFlip ? Pauli::X : Pauli::Z, *q};
}

std::vector<PauliMask> generators(const CodeSpec& spec) {
    std::vector<PauliMask> out;
    for (auto s : spec.x_supports) out.push_back({s, 0});
    for (auto s : spec.z_supports) out.push_back({0, s});
    return out;
}

PauliMask logical_x(const CodeSpec& spec) { return {spec.logical_x, 0}; }
PauliMask logical_z(const CodeSpec& spec) { return {0, spec.logical_z}; }

std::vector<std::uint8_t> even_codewords(const CodeSpec& spec) {
    std::vector<std::uint8_t> out;
    for (int m = 0; m < 8; ++m) {
        std::uint8_t c = 0;
        for (int k = 0; k < 3; ++k) {
            if (m >> k & 1) c ^= spec.x_supports[k];
        }
        out.push_back(c);
    }
    return out;
}

std::vector<GateOp> encoder_gates(const std::vector<Wire>& block) {
    check_block(block);
    auto w = [&](int one_based) { return block[one_based - 1]; };
    std::vector<GateOp> ops;
    auto cx = [&](int c, int t) { ops.push_back({GateKind::CNOT, w(c), w(t)}); };
    cx(1, 6);
    cx(1, 7);
    for (int q : {2, 3, 4}) ops.push_back({GateKind::H, w(q)});
    for (int t : {1, 5, 6}) cx(2, t);
    for (int t : {1, 5, 7}) cx(3, t);
    for (int t : {5, 6, 7}) cx(4, t);
    return ops;
}

std::vector<GateOp> transversal(GateKind kind, const std::vector<Wire>& block) {
    check_block(block);
    if (kind == GateKind::CNOT) throw std::invalid_argument("use transversal_cnot for two-block gates");
    std::vector<GateOp> ops;
    for (Wire q : block) ops.push_back({kind, q});
    return ops;
}

std::vector<GateOp> transversal_cnot(const std::vector<Wire>& control, const std::vector<Wire>& target) {
    check_block(control);
    check_block(target);
    std::vector<GateOp> ops;
    for (int i = 0; i < kBlockSize; ++i) ops.push_back({GateKind::CNOT, control[i], target[i]});
    return ops;
}

GateKind logical_s_gate() {
    static const GateKind chosen = [] {
        PureState one(1);
        apply_gate(one, {GateKind::H, 0});
        apply_gate(one, {GateKind::S, 0});
        const PureState want = encode(one);
        for (GateKind candidate : {GateKind::S, GateKind::S_adj}) {
            PureState block = plus_l();
            for (int q = 0; q < kBlockSize; ++q) apply_gate(block, {candidate, q});
            if (overlap_sq(block, want) > 1.0 - 1e-10) return candidate;
        }
        throw std::logic_error("neither bitwise phase gate implements logical S");
    }();
    return chosen;
}

int logical_measure_z(std::uint8_t bits) {
    bits &= 0x7f;
    if (auto q = DecodeTable::standard(SyndromeKind::BitFlip).qubit(syndrome_of(bits, SyndromeKind::BitFlip))) {
        bits ^= 1u << *q;
    }
    return parity(bits & CodeSpec::standard().logical_z);
}

std::vector<GateOp> recovery_gates(const Recovery& r, const std::vector<Wire>& block) {
    check_block(block);
    if (r.qubit < 0 || r.qubit >= kBlockSize) throw std::out_of_range("recovery qubit outside the block");
    return {GateOp{pauli_gate(r.pauli), block[r.qubit], -1, false}};
}

PureState zero_l() {
    PureState s(kBlockSize);
    s[0] = 0.0;
    const double a = 1.0 / std::sqrt(8.0);
    for (auto c : even_codewords()) s[c] = a;
    return s;
}

PureState one_l() {
    PureState s(kBlockSize);
    s[0] = 0.0;
    const double a = 1.0 / std::sqrt(8.0);
    for (auto c : even_codewords()) s[c ^ CodeSpec::standard().logical_x] = a;
    return s;
}

PureState encode(const PureState& logical) {
    if (logical.num_qubits() != 1) throw std::invalid_argument("encode takes a 1-qubit state");
    const PureState z = zero_l();
    const PureState o = one_l();
    PureState s(kBlockSize);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = logical[0] * z[i] + logical[1] * o[i];
    return s;
}

PureState plus_l() {
    const double r = std::numbers::sqrt2 / 2;
    return encode(PureState::from_amplitudes({r, r}));
}

PureState theta_l() {
    const double r = std::numbers::sqrt2 / 2;
    return encode(PureState::from_amplitudes({r, r * std::polar(1.0, std::numbers::pi / 4)}));
}

}  // namespace qecsim::steane
