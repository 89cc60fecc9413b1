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

#include "qecsim/ancilla.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "qecsim/dense_executor.h"
#include "qecsim/pauli_frame.h"
#include "qecsim/steane_code.h"

namespace qecsim {

namespace {

std::vector<Wire> range(int first, int count) {
    std::vector<Wire> w;
    for (int i = 0; i < count; ++i) w.push_back(first + i);
    return w;
}

Circuit build_shor() {
    Circuit c;
    c.name = "shor";
    for (Wire w = 0; w < 5; ++w) c.init(w);
    c.gate(GateKind::H, 0);
    for (Wire w = 0; w < 3; ++w) c.cnot(w, w + 1);
    c.cnot(0, 4);
    c.cnot(3, 4);
    c.measure(4, Basis::Z, 0);
    c.ops.emplace_back(ClassicalOp{nullptr, [](std::uint64_t v) { return v == 0; }, nullptr, "shor-verify"});
    c.discard(4);
    c.outputs = range(0, 4);
    return c;
}

void encode_block(Circuit& c, const std::vector<Wire>& block, bool plus) {
    c.init(block[0], plus ? InitState::Plus : InitState::Zero);
    for (int i = 1; i < steane::kBlockSize; ++i) c.init(block[i]);
    c.append(steane::encoder_gates(block));
}

Circuit build_steane(AncillaKind kind, bool verify) {
    const bool plus = kind == AncillaKind::SteanePlus;
    Circuit c;
    c.name = plus ? "steane-plus" : "steane-zero";
    const auto kept = range(0, 7);
    encode_block(c, kept, plus);
    c.outputs = kept;
    if (!verify) {
        c.name += "-unverified";
        return c;
    }
    const auto check = range(7, 7);
    encode_block(c, check, plus);
    if (plus) {
        c.append(steane::transversal_cnot(check, kept));
    } else {
        c.append(steane::transversal_cnot(kept, check));
    }
    for (int i = 0; i < steane::kBlockSize; ++i) c.measure(check[i], plus ? Basis::X : Basis::Z, i);
    const auto kind_read = plus ? steane::SyndromeKind::PhaseFlip : steane::SyndromeKind::BitFlip;
    c.ops.emplace_back(ClassicalOp{
        nullptr,
        [kind_read](std::uint64_t bits) {
            const auto b = static_cast<std::uint8_t>(bits & 0x7f);
            return steane::syndrome_of(b, kind_read) == 0 && (std::popcount(b) & 1) == 0;
        },
        nullptr, c.name + "-verify"});
    for (Wire w : check) c.discard(w);
    return c;
}

Circuit build_theta() {
    Circuit c;
    c.name = "theta";
    const auto block = range(0, 7);
    for (Wire w : block) c.init(w);
    c.gate(GateKind::H, 0);
    c.gate(GateKind::T, 0);
    c.append(steane::encoder_gates(block));
    c.outputs = block;
    return c;
}

}  // namespace

std::string ancilla_name(AncillaKind kind) {
    switch (kind) {
        case AncillaKind::Shor: return "shor";
        case AncillaKind::SteaneZero: return "steane_zero";
        case AncillaKind::SteanePlus: return "steane_plus";
        case AncillaKind::Theta: return "theta";
    }
    return "?";
}

std::shared_ptr<const Circuit> shor_circuit() {
    static const auto c = std::make_shared<const Circuit>(build_shor());
    return c;
}

std::shared_ptr<const Circuit> steane_ancilla_circuit(AncillaKind kind, bool verify) {
    if (kind != AncillaKind::SteaneZero && kind != AncillaKind::SteanePlus) {
        throw std::invalid_argument("not a Steane ancilla kind");
    }
    static const auto zero = std::make_shared<const Circuit>(build_steane(AncillaKind::SteaneZero, true));
    static const auto plus = std::make_shared<const Circuit>(build_steane(AncillaKind::SteanePlus, true));
    static const auto zero_bare = std::make_shared<const Circuit>(build_steane(AncillaKind::SteaneZero, false));
    static const auto plus_bare = std::make_shared<const Circuit>(build_steane(AncillaKind::SteanePlus, false));
    if (kind == AncillaKind::SteaneZero) return verify ? zero : zero_bare;
    return verify ? plus : plus_bare;
}

std::shared_ptr<const Circuit> theta_circuit() {
    static const auto c = std::make_shared<const Circuit>(build_theta());
    return c;
}

std::shared_ptr<const Circuit> ancilla_circuit(AncillaKind kind) {
    switch (kind) {
        case AncillaKind::Shor: return shor_circuit();
        case AncillaKind::SteaneZero:
        case AncillaKind::SteanePlus: return steane_ancilla_circuit(kind);
        case AncillaKind::Theta: return theta_circuit();
    }
    throw std::invalid_argument("unknown ancilla kind");
}

PureState ideal_ancilla(AncillaKind kind) {
    switch (kind) {
        case AncillaKind::Shor: {
            PureState s(4);
            s[0] = std::numbers::sqrt2 / 2;
            s[15] = std::numbers::sqrt2 / 2;
            return s;
        }
        case AncillaKind::SteaneZero: return steane::zero_l();
        case AncillaKind::SteanePlus: return steane::plus_l();
        case AncillaKind::Theta: return steane::theta_l();
    }
    throw std::invalid_argument("unknown ancilla kind");
}

VerifiedAncilla prepare_ancilla(AncillaKind kind, const ErrorPattern& pattern) {
    const auto circuit = ancilla_circuit(kind);
    DenseRun run = DenseRun::from_state(PureState(0), {});
    execute_dense(*circuit, run, pattern);
    VerifiedAncilla out;
    out.accept_prob = run.total_weight();
    const DenseBranch* best = nullptr;
    for (const auto& b : run.branches) {
        if (!best || b.weight > best->weight) best = &b;
    }
    if (best && best->weight > 0.0) {
        out.state = run.state_in_order(*best, circuit->outputs);
        out.log = best->history;
    }
    return out;
}

std::vector<FaultOutcome> single_fault_sweep(AncillaKind kind) {
    const auto circuit = ancilla_circuit(kind);
    const Circuit flat = flatten(*circuit);
    const auto sites = enumerate_fault_sites(*circuit);
    const PureState ideal = ideal_ancilla(kind);
    std::vector<FaultOutcome> out;
    for (std::size_t s = 0; s < sites.size(); ++s) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            ErrorPattern pattern{{{s, p}}, 1.0};
            DenseRun run = DenseRun::from_state(PureState(0), {});
            execute_dense(*circuit, run, pattern);
            FaultOutcome f{s, describe(flat.ops[sites[s].op_index]), sites[s].wire, p, run.total_weight(), 0.0};
            if (f.accept_prob > 0.0) {
                double total = 0.0;
                for (const auto& b : run.branches) {
                    total += b.weight * overlap_sq(ideal, run.state_in_order(b, circuit->outputs));
                }
                f.overlap = total / f.accept_prob;
            }
            out.push_back(f);
        }
    }
    return out;
}

int shor_residual_x_weight(std::size_t site) {
    const Circuit flat = flatten(*shor_circuit());
    const auto sites = enumerate_fault_sites(flat);
    if (site >= sites.size()) throw std::out_of_range("no such fault site");
    PauliMask p{std::uint32_t{1} << sites[site].wire, 0};
    for (std::size_t i = sites[site].op_index + 1; i < flat.ops.size(); ++i) {
        if (const auto* g = std::get_if<GateOp>(&flat.ops[i])) p = conjugate(p, Gate{g->kind, g->wire, g->target});
    }
    const int w = std::popcount(p.x & 0xfu);
    return std::min(w, 4 - w);
}

std::vector<FaultOutcome> undetected_faults(AncillaKind kind) {
    std::vector<FaultOutcome> out;
    for (const auto& f : single_fault_sweep(kind)) {
        if (f.accept_prob > kZeroProbability && f.overlap < 1.0 - 1e-9) out.push_back(f);
    }
    return out;
}

std::string format_fault_report(const std::vector<FaultOutcome>& faults) {
    std::string out;
    char line[256];
    for (const auto& f : faults) {
        std::snprintf(line, sizeof line, "%zu %s w%d %s %.6f %.6f\n", f.site, f.op.c_str(), f.wire,
                      pauli_name(f.pauli).c_str(), f.accept_prob, f.overlap);
        out += line;
    }
    return out;
}

}  // namespace qecsim
