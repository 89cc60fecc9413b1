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
#include <complex>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

namespace qecsim::steane {
namespace {

// Stabilizer supports as 1-based qubit lists, written out by hand.
const std::vector<std::vector<int>> kSupports = {{4, 5, 6, 7}, {2, 3, 6, 7}, {1, 3, 5, 7}};

std::uint8_t mask_of(const std::vector<int>& one_based) {
    std::uint8_t m = 0;
    for (int q : one_based) m |= static_cast<std::uint8_t>(1u << (q - 1));
    return m;
}

PureState single(Amplitude a0, Amplitude a1) {
    PureState q(1);
    q[0] = a0;
    q[1] = a1;
    return q;
}

TEST(CodeSpecTest, SupportsMatchHandWrittenLists) {
    const auto& spec = CodeSpec::standard();
    for (int k = 0; k < 3; ++k) {
        EXPECT_EQ(spec.x_supports[k], mask_of(kSupports[k]));
        EXPECT_EQ(spec.z_supports[k], mask_of(kSupports[k]));
    }
    EXPECT_EQ(spec.logical_x, 0x7f);
    EXPECT_EQ(spec.logical_z, 0x7f);
}

TEST(CodeSpecTest, SingleErrorSyndromeIsMembershipPattern) {
    for (int q = 0; q < kBlockSize; ++q) {
        std::uint8_t expected = 0;
        for (int k = 0; k < 3; ++k) {
            for (int member : kSupports[k]) {
                if (member == q + 1) expected |= static_cast<std::uint8_t>(1u << k);
            }
        }
        for (auto kind : {SyndromeKind::BitFlip, SyndromeKind::PhaseFlip}) {
            EXPECT_EQ(syndrome_of(static_cast<std::uint8_t>(1u << q), kind), expected) << q;
        }
    }
}

TEST(DecodeTableTest, BijectionOnSingleErrors) {
    for (auto kind : {SyndromeKind::BitFlip, SyndromeKind::PhaseFlip}) {
        std::set<int> located;
        EXPECT_FALSE(DecodeTable::standard(kind).qubit(0).has_value());
        for (std::uint8_t s = 1; s < 8; ++s) {
            const auto q = DecodeTable::standard(kind).qubit(s);
            ASSERT_TRUE(q.has_value());
            EXPECT_EQ(syndrome_of(static_cast<std::uint8_t>(1u << *q), kind), s);
            located.insert(*q);
        }
        EXPECT_EQ(located.size(), 7u);
    }
}

TEST(DecodeTableTest, RecoveryPauliFollowsKind) {
    for (std::uint8_t s = 1; s < 8; ++s) {
        EXPECT_EQ(decode_syndrome(s, SyndromeKind::BitFlip)->pauli, Pauli::X);
        EXPECT_EQ(decode_syndrome(s, SyndromeKind::PhaseFlip)->pauli, Pauli::Z);
    }
    EXPECT_FALSE(decode_syndrome(0, SyndromeKind::BitFlip).has_value());
}

TEST(CodeSpecTest, EvenCodewordsAreTheSpanOfTheSupports) {
    std::set<std::uint8_t> span;
    for (int m = 0; m < 8; ++m) {
        std::uint8_t c = 0;
        for (int k = 0; k < 3; ++k) {
            if (m >> k & 1) c ^= mask_of(kSupports[k]);
        }
        span.insert(c);
    }
    const auto words = even_codewords();
    EXPECT_EQ(std::set<std::uint8_t>(words.begin(), words.end()), span);
    for (auto w : words) EXPECT_TRUE(std::popcount(w) == 0 || std::popcount(w) == 4);
}

TEST(CodeSpecTest, GeneratorsAndLogicalsCommute) {
    const auto gens = generators();
    ASSERT_EQ(gens.size(), 6u);
    auto anti = [](PauliMask a, PauliMask b) { return (std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) % 2; };
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) EXPECT_EQ(anti(gens[i], gens[j]), 0);
        EXPECT_EQ(anti(gens[i], logical_x()), 0);
        EXPECT_EQ(anti(gens[i], logical_z()), 0);
    }
    EXPECT_EQ(anti(logical_x(), logical_z()), 1);
}

TEST(EncoderTest, ZeroIsUniformOverEvenCodewords) {
    const PureState zero = zero_l();
    ASSERT_EQ(zero.num_qubits(), 7);
    const auto words = even_codewords();
    for (std::size_t i = 0; i < zero.size(); ++i) {
        const bool member = std::find(words.begin(), words.end(), i) != words.end();
        EXPECT_NEAR(std::abs(zero[i]), member ? 1.0 / std::sqrt(8.0) : 0.0, 1e-12) << i;
    }
}

TEST(EncoderTest, GateCircuitReproducesEncode) {
    const double h = std::numbers::sqrt2 / 2;
    for (const auto& in : {single(1, 0), single(0, 1), single(h, h), single(0.6, Amplitude(0, 0.8))}) {
        PureState s = tensor(in, PureState(6));
        for (const auto& g : encoder_gates({0, 1, 2, 3, 4, 5, 6})) apply_gate(s, Gate{g.kind, g.wire, g.target});
        EXPECT_NEAR(overlap_sq(s, encode(in)), 1.0, 1e-12);
        for (const auto& g : generators()) {
            PureState t = s;
            for (int q = 0; q < 7; ++q) {
                if (g.x >> q & 1) apply_gate(t, {GateKind::X, q});
                if (g.z >> q & 1) apply_gate(t, {GateKind::Z, q});
            }
            EXPECT_NEAR(std::real(inner_product(s, t)), 1.0, 1e-12);
        }
    }
}

TEST(EncoderTest, NamedStatesAreEncodedSingles) {
    const double h = std::numbers::sqrt2 / 2;
    EXPECT_NEAR(overlap_sq(one_l(), encode(single(0, 1))), 1.0, 1e-12);
    EXPECT_NEAR(overlap_sq(plus_l(), encode(single(h, h))), 1.0, 1e-12);
    EXPECT_NEAR(overlap_sq(theta_l(), encode(single(h, h * std::polar(1.0, std::numbers::pi / 4)))), 1.0, 1e-12);
    EXPECT_NEAR(overlap_sq(zero_l(), one_l()), 0.0, 1e-12);
}

TEST(LogicalGateTest, TransversalPhaseImplementsS) {
    const double h = std::numbers::sqrt2 / 2;
    PureState s = plus_l();
    for (const auto& g : transversal(logical_s_gate(), {0, 1, 2, 3, 4, 5, 6})) apply_gate(s, Gate{g.kind, g.wire});
    EXPECT_NEAR(overlap_sq(s, encode(single(h, Amplitude(0, h)))), 1.0, 1e-12);
}

TEST(LogicalGateTest, TransversalHadamardSwapsZeroAndPlus) {
    PureState s = zero_l();
    for (const auto& g : transversal(GateKind::H, {0, 1, 2, 3, 4, 5, 6})) apply_gate(s, Gate{g.kind, g.wire});
    EXPECT_NEAR(overlap_sq(s, plus_l()), 1.0, 1e-12);
}

TEST(LogicalMeasureTest, ReadsParityAfterSingleFlipCorrection) {
    for (auto w : even_codewords()) {
        EXPECT_EQ(logical_measure_z(w), 0);
        EXPECT_EQ(logical_measure_z(w ^ 0x7f), 1);
        for (int q = 0; q < 7; ++q) {
            EXPECT_EQ(logical_measure_z(static_cast<std::uint8_t>(w ^ (1u << q))), 0);
            EXPECT_EQ(logical_measure_z(static_cast<std::uint8_t>(w ^ 0x7f ^ (1u << q))), 1);
        }
    }
}

TEST(RecoveryTest, RejectsQubitOutsideBlock) {
    EXPECT_THROW(recovery_gates({Pauli::X, 7}, {0, 1, 2, 3, 4, 5, 6}), std::out_of_range);
    EXPECT_THROW(encode(PureState(2)), std::invalid_argument);
}

}  // namespace
}  // namespace qecsim::steane
