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

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace qecsim {
namespace {

constexpr double kTol = 1e-12;
const double kHalf = std::numbers::sqrt2 / 2;

PureState random_state(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Amplitude> a(std::size_t{1} << n);
    for (auto& x : a) x = {g(rng), g(rng)};
    PureState s = PureState::from_amplitudes(a);
    s.normalize();
    return s;
}

TEST(PureStateTest, StartsInAllZeros) {
    PureState s(3);
    EXPECT_EQ(s.size(), 8u);
    EXPECT_NEAR(std::abs(s[0]), 1.0, kTol);
    EXPECT_NEAR(s.norm(), 1.0, kTol);
}

TEST(PureStateTest, HadamardMakesPlus) {
    PureState s(1);
    apply_gate(s, {GateKind::H, 0});
    EXPECT_NEAR(s[0].real(), kHalf, kTol);
    EXPECT_NEAR(s[1].real(), kHalf, kTol);
}

TEST(PureStateTest, PhaseGatesOnOne) {
    PureState s = PureState::basis_state(1, 1);
    apply_gate(s, {GateKind::S, 0});
    EXPECT_NEAR(std::abs(s[1] - Amplitude(0, 1)), 0.0, kTol);
    s = PureState::basis_state(1, 1);
    apply_gate(s, {GateKind::T, 0});
    EXPECT_NEAR(std::abs(s[1] - std::polar(1.0, std::numbers::pi / 4)), 0.0, kTol);
    apply_gate(s, {GateKind::T, 0});
    apply_gate(s, {GateKind::S_adj, 0});
    EXPECT_NEAR(std::abs(s[1] - 1.0), 0.0, kTol);
}

TEST(PureStateTest, CnotUsesLowBitAsQubitZero) {
    // Index 1 = qubit 0 set. CNOT 0 -> 1 sends it to index 3.
    PureState s = PureState::basis_state(2, 1);
    apply_gate(s, {GateKind::CNOT, 0, 1});
    EXPECT_NEAR(std::abs(s[3]), 1.0, kTol);
    s = PureState::basis_state(2, 2);
    apply_gate(s, {GateKind::CNOT, 0, 1});
    EXPECT_NEAR(std::abs(s[2]), 1.0, kTol);
}

TEST(PureStateTest, BadGatesThrow) {
    PureState s(2);
    EXPECT_THROW(apply_gate(s, {GateKind::H, 2}), std::out_of_range);
    EXPECT_THROW(apply_gate(s, {GateKind::CNOT, 1, 1}), std::invalid_argument);
}

TEST(PureStateTest, AdjointUndoesGate) {
    const PureState start = random_state(3, 7);
    for (auto kind : {GateKind::H, GateKind::S, GateKind::S_adj, GateKind::T, GateKind::X, GateKind::Y, GateKind::Z}) {
        PureState s = start;
        apply_gate(s, {kind, 1});
        apply_gate_adjoint(s, {kind, 1});
        EXPECT_NEAR(overlap_sq(s, start), 1.0, kTol) << gate_name(kind);
    }
}

TEST(PureStateTest, TensorPutsLowFactorOnLowQubits) {
    const PureState one = PureState::basis_state(1, 1);
    const PureState zero(2);
    const PureState t = tensor(one, zero);
    EXPECT_EQ(t.num_qubits(), 3);
    EXPECT_NEAR(std::abs(t[1]), 1.0, kTol);
}

TEST(PureStateTest, BellProjection) {
    PureState s(2);
    apply_gate(s, {GateKind::H, 0});
    apply_gate(s, {GateKind::CNOT, 0, 1});
    const auto p1 = project(s, 0, Basis::Z, 1);
    EXPECT_NEAR(p1.probability, 0.5, kTol);
    ASSERT_TRUE(p1.state);
    EXPECT_NEAR(std::abs((*p1.state)[3]), 1.0, kTol);
    // X-basis outcome on a Bell pair is also uniform.
    EXPECT_NEAR(project(s, 1, Basis::X, 0).probability, 0.5, kTol);
}

TEST(PureStateTest, ImpossibleOutcomeHasNoState) {
    const PureState s(1);
    const auto p = project(s, 0, Basis::Z, 1);
    EXPECT_EQ(p.probability, 0.0);
    EXPECT_FALSE(p.state);
}

TEST(PureStateTest, DiscardProductQubit) {
    PureState s = tensor(random_state(2, 3), PureState::basis_state(1, 1));
    const PureState rest = discard(s, 2);
    EXPECT_EQ(rest.num_qubits(), 2);
    EXPECT_NEAR(overlap_sq(rest, random_state(2, 3)), 1.0, kTol);
}

TEST(PureStateTest, DiscardEntangledThrows) {
    PureState s(2);
    apply_gate(s, {GateKind::H, 0});
    apply_gate(s, {GateKind::CNOT, 0, 1});
    EXPECT_THROW(discard(s, 0), std::logic_error);
}

TEST(PureStateTest, PermuteQubits) {
    const PureState s = PureState::basis_state(3, 0b001);
    const std::vector<int> order{2, 0, 1};  // new qubit i = old qubit order[i]
    const PureState p = permute_qubits(s, order);
    EXPECT_NEAR(std::abs(p[0b010]), 1.0, kTol);
}

TEST(PureStateTest, OverlapOfMismatchedSizesThrows) {
    EXPECT_THROW(overlap_sq(PureState(1), PureState(2)), std::invalid_argument);
}

}  // namespace
}  // namespace qecsim
