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

#include "qecsim/circuit.h"

#include "overloaded.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qecsim {

void Circuit::append(std::vector<GateOp> gates) {
    for (auto& g : gates) {
        ops.emplace_back(std::move(g));
    }
}

std::vector<Wire> WireAllocator::take(int count) {
    std::vector<Wire> wires;
    wires.reserve(count);
    for (int i = 0; i < count; ++i) {
        wires.push_back(next());
    }
    return wires;
}

namespace {

using internal::Overloaded;

// Each inlined preparation gets its own band of record bits so that its
// classical ops neither read nor clear the enclosing scope's outcomes.
constexpr int kScopeBits = 16;
constexpr int kMaxDepth = 64 / kScopeBits - 1;
constexpr Record kScopeMask = (Record{1} << kScopeBits) - 1;

void flatten_into(const Circuit& circuit, const std::map<Wire, Wire>& fixed, bool noisy, int depth,
                  WireAllocator& alloc, Circuit& out) {
    if (depth > kMaxDepth) {
        throw std::invalid_argument("preparations nested too deeply in " + circuit.name);
    }
    const int shift = depth * kScopeBits;
    std::map<Wire, Wire> rename = fixed;
    auto map_wire = [&](Wire w) {
        if (w < 0) {
            return w;
        }
        auto it = rename.find(w);
        if (it == rename.end()) {
            it = rename.emplace(w, alloc.next()).first;
        }
        return it->second;
    };
    for (const auto& op : circuit.ops) {
        std::visit(Overloaded{
                       [&](const GateOp& g) {
                           out.ops.emplace_back(GateOp{g.kind, map_wire(g.wire), map_wire(g.target), g.noisy && noisy});
                       },
                       [&](const InitOp& i) {
                           out.ops.emplace_back(InitOp{map_wire(i.wire), i.state, i.noisy && noisy});
                       },
                       [&](const MeasureOp& m) {
                           if (depth > 0 && (m.slot < 0 || m.slot >= kScopeBits)) {
                               throw std::invalid_argument("measurement slot out of range in " + circuit.name);
                           }
                           out.ops.emplace_back(MeasureOp{map_wire(m.wire), m.basis, m.slot + shift, m.noisy && noisy});
                       },
                       [&](const DiscardOp& d) { out.ops.emplace_back(DiscardOp{map_wire(d.wire)}); },
                       [&](const ClassicalOp& c) {
                           ClassicalOp copy = c;
                           if (depth > 0) {
                               auto inner = c.decode;
                               const bool fold = c.fold;
                               copy.decode = [inner, fold, shift](Record r) -> std::uint64_t {
                                   const Record local = (r >> shift) & kScopeMask;
                                   const std::uint64_t value = inner ? inner(local) : local;
                                   if (!fold) return value;
                                   return (r & ~(kScopeMask << shift)) | ((value & kScopeMask) << shift);
                               };
                               copy.scope = kScopeMask << shift;
                           }
                           if (c.correct) {
                               // Feed-forward gates name wires of this scope.
                               auto inner = c.correct;
                               std::map<Wire, Wire> snapshot = rename;
                               copy.correct = [inner, snapshot](std::uint64_t v) {
                                   auto gates = inner(v);
                                   for (auto& g : gates) {
                                       g.wire = snapshot.at(g.wire);
                                       if (g.target >= 0) {
                                           g.target = snapshot.at(g.target);
                                       }
                                   }
                                   return gates;
                               };
                           }
                           out.ops.emplace_back(std::move(copy));
                       },
                       [&](const PrepareOp& p) {
                           if (p.circuit->outputs.size() != p.outputs.size()) {
                               throw std::invalid_argument("prepare op output count mismatch for " + p.circuit->name);
                           }
                           std::map<Wire, Wire> sub_fixed;
                           for (std::size_t i = 0; i < p.outputs.size(); ++i) {
                               sub_fixed[p.circuit->outputs[i]] = map_wire(p.outputs[i]);
                           }
                           flatten_into(*p.circuit, sub_fixed, noisy && p.noisy, depth + 1, alloc, out);
                       },
                   },
                   op);
    }
}

}  // namespace

Wire max_wire(const Circuit& circuit) {
    Wire top = -1;
    for (Wire w : circuit.inputs) top = std::max(top, w);
    for (Wire w : circuit.outputs) top = std::max(top, w);
    for (const auto& op : circuit.ops) {
        std::visit(Overloaded{
                       [&](const GateOp& g) { top = std::max({top, g.wire, g.target}); },
                       [&](const InitOp& i) { top = std::max(top, i.wire); },
                       [&](const MeasureOp& m) { top = std::max(top, m.wire); },
                       [&](const DiscardOp& d) { top = std::max(top, d.wire); },
                       [&](const ClassicalOp&) {},
                       [&](const PrepareOp& p) {
                           for (Wire w : p.outputs) top = std::max(top, w);
                       },
                   },
                   op);
    }
    return top;
}

Circuit flatten(const Circuit& circuit) {
    Circuit out;
    out.name = circuit.name;
    out.inputs = circuit.inputs;
    out.outputs = circuit.outputs;
    WireAllocator alloc(max_wire(circuit) + 1);
    std::map<Wire, Wire> identity;
    // Every wire the parent names keeps its id; only sub-circuit internals are renamed.
    auto keep = [&](Wire w) {
        if (w >= 0) identity[w] = w;
    };
    for (Wire w : circuit.inputs) keep(w);
    for (Wire w : circuit.outputs) keep(w);
    for (const auto& op : circuit.ops) {
        std::visit(Overloaded{
                       [&](const GateOp& g) {
                           keep(g.wire);
                           keep(g.target);
                       },
                       [&](const InitOp& i) { keep(i.wire); },
                       [&](const MeasureOp& m) { keep(m.wire); },
                       [&](const DiscardOp& d) { keep(d.wire); },
                       [&](const ClassicalOp&) {},
                       [&](const PrepareOp& p) {
                           for (Wire w : p.outputs) keep(w);
                       },
                   },
                   op);
    }
    flatten_into(circuit, identity, true, 0, alloc, out);
    return out;
}

std::uint64_t count_fault_sites(const Circuit& circuit) {
    std::uint64_t total = 0;
    for (const auto& op : circuit.ops) {
        std::visit(Overloaded{
                       [&](const GateOp& g) {
                           if (g.noisy) total += g.kind == GateKind::CNOT ? 2 : 1;
                       },
                       [&](const InitOp& i) { total += i.noisy ? 1 : 0; },
                       [&](const MeasureOp& m) { total += m.noisy ? 1 : 0; },
                       [&](const DiscardOp&) {},
                       [&](const ClassicalOp&) {},
                       [&](const PrepareOp& p) {
                           if (p.noisy) total += count_fault_sites(*p.circuit);
                       },
                   },
                   op);
    }
    return total;
}

std::string describe(const CircuitOp& op) {
    return std::visit(
        Overloaded{
            [](const GateOp& g) {
                std::string s = gate_name(g.kind) + " w" + std::to_string(g.wire);
                if (g.kind == GateKind::CNOT) s += "->w" + std::to_string(g.target);
                return s;
            },
            [](const InitOp& i) {
                return std::string("init w") + std::to_string(i.wire) + (i.state == InitState::Plus ? " |+>" : " |0>");
            },
            [](const MeasureOp& m) {
                return std::string("measure") + (m.basis == Basis::X ? "X" : "Z") + " w" + std::to_string(m.wire) +
                       " slot" + std::to_string(m.slot);
            },
            [](const DiscardOp& d) { return "discard w" + std::to_string(d.wire); },
            [](const ClassicalOp& c) { return "classical " + c.label; },
            [](const PrepareOp& p) { return "prepare " + p.circuit->name; },
        },
        op);
}

}  // namespace qecsim
