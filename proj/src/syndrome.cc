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

#include "qecsim/syndrome.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "qecsim/ancilla.h"

namespace qecsim {

using steane::SyndromeKind;

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<Wire> support_wires(std::uint8_t support, const std::vector<Wire>& data) {
    std::vector<Wire> out;
    for (int q = 0; q < steane::kBlockSize; ++q) {
        if (support >> q & 1) out.push_back(data[q]);
    }
    return out;
}

ClassicalOp syndrome_check(SyndromeKind kind, const std::vector<Wire>& data, bool postselect,
                           std::function<std::uint64_t(Record)> decode) {
    ClassicalOp op;
    op.decode = std::move(decode);
    op.label = std::string(steane::kind_name(kind)) + "-syndrome";
    if (postselect) {
        op.accept = [](std::uint64_t s) { return s == 0; };
    } else {
        op.correct = [kind, data](std::uint64_t s) {
            const auto r = steane::decode_syndrome(static_cast<std::uint8_t>(s), kind);
            return r ? steane::recovery_gates(*r, data) : std::vector<GateOp>{};
        };
    }
    return op;
}

void shor_block(Circuit& c, const std::vector<Wire>& data, SyndromeKind kind, bool postselect, WireAllocator& alloc) {
    const auto& spec = steane::CodeSpec::standard();
    const auto& supports = kind == SyndromeKind::BitFlip ? spec.z_supports : spec.x_supports;
    for (int k = 0; k < 3; ++k) {
        const auto anc = alloc.take(4);
        c.ops.emplace_back(PrepareOp{shor_circuit(), anc, true});
        const auto targets = support_wires(supports[k], data);
        if (kind == SyndromeKind::BitFlip) {
            for (Wire a : anc) c.gate(GateKind::H, a);
            for (int i = 0; i < 4; ++i) c.cnot(targets[i], anc[i]);
        } else {
            for (int i = 0; i < 4; ++i) c.cnot(anc[i], targets[i]);
            for (Wire a : anc) c.gate(GateKind::H, a);
        }
        for (int i = 0; i < 4; ++i) c.measure(anc[i], Basis::Z, 4 * k + i);
        for (Wire a : anc) c.discard(a);
        // Only the parity of the four outcomes matters; keep it in the
        // nibble's low bit.
        ClassicalOp fold;
        fold.label = "shor-parity";
        fold.fold = true;
        fold.decode = [k](Record r) {
            const Record nibble = (r >> (4 * k)) & 0xf;
            return (r & ~(Record{0xf} << (4 * k))) | (static_cast<Record>(std::popcount(nibble) & 1) << (4 * k));
        };
        c.ops.emplace_back(std::move(fold));
    }
    c.ops.emplace_back(syndrome_check(kind, data, postselect, [](Record r) {
        std::uint64_t s = 0;
        for (int k = 0; k < 3; ++k) s |= static_cast<std::uint64_t>(std::popcount((r >> (4 * k)) & 0xf) & 1) << k;
        return s;
    }));
}

void steane_block(Circuit& c, const std::vector<Wire>& data, SyndromeKind kind, bool postselect,
                  WireAllocator& alloc) {
    const auto anc = alloc.take(steane::kBlockSize);
    if (kind == SyndromeKind::BitFlip) {
        c.ops.emplace_back(PrepareOp{steane_ancilla_circuit(AncillaKind::SteanePlus), anc, true});
        c.append(steane::transversal_cnot(data, anc));
        for (int i = 0; i < steane::kBlockSize; ++i) c.measure(anc[i], Basis::Z, i);
    } else {
        c.ops.emplace_back(PrepareOp{steane_ancilla_circuit(AncillaKind::SteaneZero), anc, true});
        c.append(steane::transversal_cnot(anc, data));
        for (int i = 0; i < steane::kBlockSize; ++i) c.measure(anc[i], Basis::X, i);
    }
    for (Wire a : anc) c.discard(a);
    c.ops.emplace_back(syndrome_check(kind, data, postselect, [kind](Record r) {
        return static_cast<std::uint64_t>(steane::syndrome_of(static_cast<std::uint8_t>(r & 0x7f), kind));
    }));
}

}  // namespace

std::string order_name(SyndromeOrder order) {
    switch (order) {
        case SyndromeOrder::XZXZ: return "XZXZ";
        case SyndromeOrder::XZZX: return "XZZX";
        case SyndromeOrder::ZXXZ: return "ZXXZ";
        case SyndromeOrder::ZXZX: return "ZXZX";
    }
    return "?";
}

std::string method_name(SMethod method) { return method == SMethod::Shor ? "shor" : "steane"; }

std::optional<SyndromeOrder> parse_order(std::string_view text) {
    const std::string t = lower(text);
    for (auto o : all_orders()) {
        if (lower(order_name(o)) == t) return o;
    }
    return std::nullopt;
}

std::optional<SMethod> parse_method(std::string_view text) {
    const std::string t = lower(text);
    if (t == "shor") return SMethod::Shor;
    if (t == "steane") return SMethod::Steane;
    return std::nullopt;
}

const std::array<SyndromeOrder, 4>& all_orders() {
    static const std::array<SyndromeOrder, 4> orders{SyndromeOrder::XZXZ, SyndromeOrder::XZZX, SyndromeOrder::ZXXZ,
                                                     SyndromeOrder::ZXZX};
    return orders;
}

std::array<SyndromeKind, 4> order_blocks(SyndromeOrder order) {
    const std::string name = order_name(order);
    std::array<SyndromeKind, 4> out{};
    for (int i = 0; i < 4; ++i) out[i] = name[i] == 'X' ? SyndromeKind::BitFlip : SyndromeKind::PhaseFlip;
    return out;
}

void append_sm_block(Circuit& circuit, const std::vector<Wire>& data, SyndromeKind kind, const RoundOptions& options,
                     WireAllocator& alloc) {
    if (data.size() != steane::kBlockSize) throw std::invalid_argument("syndrome block needs 7 data wires");
    if (options.method == SMethod::Shor) {
        shor_block(circuit, data, kind, options.postselect, alloc);
    } else {
        steane_block(circuit, data, kind, options.postselect, alloc);
    }
}

void append_qec_round(Circuit& circuit, const std::vector<Wire>& data, SyndromeOrder order,
                      const RoundOptions& options, WireAllocator& alloc) {
    std::vector<SyndromeKind> done;
    for (auto kind : order_blocks(order)) {
        if (options.single_set && std::find(done.begin(), done.end(), kind) != done.end()) continue;
        done.push_back(kind);
        append_sm_block(circuit, data, kind, options, alloc);
    }
}

std::uint64_t block_fault_sites(SMethod method) {
    Circuit c;
    WireAllocator alloc(7);
    const std::vector<Wire> data{0, 1, 2, 3, 4, 5, 6};
    append_sm_block(c, data, SyndromeKind::BitFlip, {method}, alloc);
    return count_fault_sites(c);
}

std::uint64_t round_fault_sites(SMethod method, bool single_set) {
    Circuit c;
    WireAllocator alloc(7);
    const std::vector<Wire> data{0, 1, 2, 3, 4, 5, 6};
    append_qec_round(c, data, SyndromeOrder::XZXZ, {method, true, single_set}, alloc);
    return count_fault_sites(c);
}

}  // namespace qecsim
