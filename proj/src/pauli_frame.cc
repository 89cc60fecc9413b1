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

#include "qecsim/pauli_frame.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qecsim {

namespace {

std::uint32_t drop_bit(std::uint32_t v, int q) {
    const std::uint32_t low = (std::uint32_t{1} << q) - 1;
    return (v & low) | ((v >> 1) & ~low);
}

}  // namespace

bool anticommute(PauliMask a, PauliMask b) { return std::popcount((a.x & b.z) ^ (a.z & b.x)) & 1; }

PauliMask conjugate(PauliMask p, const Gate& gate) {
    const std::uint32_t q = std::uint32_t{1} << gate.qubit;
    switch (gate.kind) {
        case GateKind::H: {
            const bool xb = p.x & q;
            const bool zb = p.z & q;
            p.x = (p.x & ~q) | (zb ? q : 0);
            p.z = (p.z & ~q) | (xb ? q : 0);
            return p;
        }
        case GateKind::S:
        case GateKind::S_adj:
            if (p.x & q) p.z ^= q;
            return p;
        case GateKind::CNOT: {
            const std::uint32_t t = std::uint32_t{1} << gate.target;
            if (p.x & q) p.x ^= t;
            if (p.z & t) p.z ^= q;
            return p;
        }
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
            return p;
        case GateKind::T:
            break;
    }
    throw std::invalid_argument("T does not map Pauli operators to Pauli operators");
}

PauliMask remove_position(PauliMask p, int q) { return {drop_bit(p.x, q), drop_bit(p.z, q)}; }

void apply_mask(PureState& state, PauliMask p) {
    if (p.is_identity()) return;
    PureState out(state.num_qubits());
    for (std::size_t i = 0; i < state.size(); ++i) {
        const std::size_t src = i ^ p.x;
        const bool negative = std::popcount(static_cast<std::uint32_t>(src) & p.z) & 1;
        out[i] = negative ? -state[src] : state[src];
    }
    state = std::move(out);
}

Amplitude masked_inner_product(const PureState& a, PauliMask p, const PureState& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("masked overlap of registers with different sizes");
    }
    Amplitude total{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::size_t src = i ^ p.x;
        const Amplitude term = std::conj(a[i]) * b[src];
        if (std::popcount(static_cast<std::uint32_t>(src) & p.z) & 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

std::vector<PauliMask> StabilizerGroup::generators() const {
    std::vector<PauliMask> out;
    for (auto r : rows_) out.push_back(PauliMask::unpack(r));
    return out;
}

PauliMask StabilizerGroup::reduce(PauliMask p) const {
    std::uint64_t v = p.packed();
    for (auto r : rows_) {
        if (v >> std::countr_zero(r) & 1) v ^= r;
    }
    return PauliMask::unpack(v);
}

void StabilizerGroup::add(PauliMask p) {
    const std::uint64_t v = reduce(p).packed();
    if (v == 0) return;
    const int pivot = std::countr_zero(v);
    for (auto& r : rows_) {
        if (r >> pivot & 1) r ^= v;
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), v,
                                [](std::uint64_t a, std::uint64_t b) { return std::countr_zero(a) < std::countr_zero(b); });
    rows_.insert(pos, v);
}

void StabilizerGroup::rebuild(std::vector<std::uint64_t> rows) {
    rows_.clear();
    for (auto r : rows) add(PauliMask::unpack(r));
}

void StabilizerGroup::conjugate(const Gate& gate) {
    if (is_pauli(gate.kind)) return;
    if (gate.kind == GateKind::T) {
        restrict_commuting({0, std::uint32_t{1} << gate.qubit});
        return;
    }
    std::vector<std::uint64_t> rows;
    for (auto r : rows_) rows.push_back(qecsim::conjugate(PauliMask::unpack(r), gate).packed());
    rebuild(std::move(rows));
}

void StabilizerGroup::restrict_commuting(PauliMask p) {
    std::vector<std::uint64_t> rows;
    std::uint64_t first = 0;
    bool have_first = false;
    for (auto r : rows_) {
        if (!anticommute(PauliMask::unpack(r), p)) {
            rows.push_back(r);
        } else if (!have_first) {
            first = r;
            have_first = true;
        } else {
            rows.push_back(r ^ first);
        }
    }
    if (!have_first) return;
    rebuild(std::move(rows));
}

void StabilizerGroup::measure(PauliMask p) {
    restrict_commuting(p);
    add(p);
}

void StabilizerGroup::remove_qubit(int q) {
    if (q < 0 || q >= num_qubits_) throw std::out_of_range("group has no position " + std::to_string(q));
    std::vector<std::uint64_t> rows;
    for (auto r : rows_) rows.push_back(remove_position(PauliMask::unpack(r), q).packed());
    --num_qubits_;
    rebuild(std::move(rows));
}

void StabilizerGroup::append(const StabilizerGroup& other) {
    if (num_qubits_ + other.num_qubits_ > 32) throw std::length_error("stabilizer group wider than 32 positions");
    const int shift = num_qubits_;
    num_qubits_ += other.num_qubits_;
    for (auto r : other.rows_) {
        PauliMask p = PauliMask::unpack(r);
        add({p.x << shift, p.z << shift});
    }
}

}  // namespace qecsim
