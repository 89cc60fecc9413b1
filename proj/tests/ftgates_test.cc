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


#include "qecsim/ftgates.h"

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "qecsim/dense_executor.h"
#include "qecsim/experiment.h"
#include "qecsim/steane_code.h"

namespace qecsim {
namespace {

using G = LogicalGate;

PureState single(Amplitude a0, Amplitude a1) {
    PureState q(1);
    q[0] = a0;
    q[1] = a1;
    return q;
}

TEST(SequenceTest, LettersExpandToPrimitives) {
    EXPECT_EQ(expand_sequence("A"), (std::vector<G>{G::H, G::S, G::T}));
    EXPECT_EQ(expand_sequence("B"), (std::vector<G>{G::H, G::T}));
    EXPECT_EQ(expand_sequence("A", true), (std::vector<G>{G::T, G::S, G::H}));
    EXPECT_EQ(expand_sequence("ABBB").size(), 9u);
    EXPECT_EQ(expand_sequence(kFullSequence).size(), 50u);
    EXPECT_TRUE(expand_sequence("").empty());
}

TEST(SequenceTest, FullSequenceHasTwentyLettersAndTwentyTs) {
    const auto gates = expand_sequence(kFullSequence);
    EXPECT_EQ(std::string(kFullSequence).size(), 20u);
    EXPECT_EQ(std::count(gates.begin(), gates.end(), G::T), 20);
    EXPECT_EQ(std::count(gates.begin(), gates.end(), G::H), 20);
    EXPECT_EQ(std::count(gates.begin(), gates.end(), G::S), 10);
}

TEST(SequenceTest, InvalidLettersThrow) {
    EXPECT_THROW(expand_sequence("ABC"), std::invalid_argument);
    EXPECT_THROW(expand_sequence("A B"), std::invalid_argument);
    EXPECT_THROW(expand_sequence("1"), std::invalid_argument);
}

TEST(CliffordTest, RejectsT) {
    Circuit c;
    EXPECT_THROW(append_clifford(c, {0, 1, 2, 3, 4, 5, 6}, G::T), std::invalid_argument);
}

TEST(CliffordTest, LogicalGatesMatchSingleQubitAction) {
    const double h = std::numbers::sqrt2 / 2;
    const PureState in = single(0.6, Amplitude(0, 0.8));
    for (G g : {G::H, G::S}) {
        PureState encoded = steane::encode(in);
        Circuit c;
        append_clifford(c, {0, 1, 2, 3, 4, 5, 6}, g);
        for (const auto& op : c.ops) {
            const auto& gate = std::get<GateOp>(op);
            apply_gate(encoded, {gate.kind, gate.wire});
        }
        PureState expected = in;
        apply_logical(expected, g);
        EXPECT_NEAR(overlap_sq(encoded, steane::encode(expected)), 1.0, 1e-12);
    }
    PureState plus = single(h, h);
    apply_logical(plus, G::T);
    EXPECT_NEAR(std::arg(plus[1] / plus[0]), std::numbers::pi / 4, 1e-12);
}

struct Injection {
    Circuit circuit;
    std::vector<Wire> out;
};

Injection injection(const PureState& in, bool postselect) {
    Injection r;
    WireAllocator alloc;
    const auto data = alloc.take(7);
    r.circuit.inputs = data;
    r.out = append_t(r.circuit, data, alloc, {postselect, true});
    r.circuit.outputs = r.out;
    return r;
}

TEST(TGateTest, FaultSites) {
    const auto inj = injection(single(1, 0), true);
    EXPECT_EQ(count_fault_sites(inj.circuit), 55u);
    EXPECT_EQ(inj.out.size(), 7u);
}

TEST(TGateTest, NoiselessPostselectedInjection) {
    for (const auto& in : {single(1, 0), single(0, 1), single(0.6, Amplitude(0, 0.8))}) {
        const auto inj = injection(in, true);
        DenseRun run = DenseRun::from_state(steane::encode(in), inj.circuit.inputs);
        execute_dense(inj.circuit, run);
        PureState expected = in;
        apply_logical(expected, G::T);
        // Outcome 0 of the logical readout is kept: half the mass.
        EXPECT_NEAR(run.total_weight(), 0.5, 1e-12);
        EXPECT_NEAR(run.rejected_mass, 0.5, 1e-12);
        for (const auto& b : run.branches) {
            EXPECT_NEAR(overlap_sq(run.state_in_order(b, inj.out), steane::encode(expected)), 1.0, 1e-12);
        }
    }
}

TEST(TGateTest, NoiselessCorrectedInjection) {
    const PureState in = single(0.6, Amplitude(0, 0.8));
    const auto inj = injection(in, false);
    DenseRun run = DenseRun::from_state(steane::encode(in), inj.circuit.inputs);
    execute_dense(inj.circuit, run);
    PureState expected = in;
    apply_logical(expected, G::T);
    EXPECT_NEAR(run.total_weight(), 1.0, 1e-12);
    for (const auto& b : run.branches) {
        EXPECT_NEAR(overlap_sq(run.state_in_order(b, inj.out), steane::encode(expected)), 1.0, 1e-12);
    }
}

TEST(TGateTest, NoiselessThetaOptionDropsSites) {
    WireAllocator alloc;
    Circuit c;
    const auto data = alloc.take(7);
    append_t(c, data, alloc, {true, false});
    EXPECT_EQ(count_fault_sites(c), 21u);
}

}  // namespace
}  // namespace qecsim
