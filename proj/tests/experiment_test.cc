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


#include "qecsim/experiment.h"

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "qecsim/steane_code.h"

namespace qecsim {
namespace {

TEST(GridTest, SixteenEnvironmentsWithPxFastest) {
    const auto grid = environment_grid(3e-7);
    ASSERT_EQ(grid.size(), 16u);
    const double levels[] = {1e-10, 1e-8, 1e-6, 1e-4};
    for (int i = 0; i < 16; ++i) {
        EXPECT_EQ(grid[i].grid_index, i + 1);
        EXPECT_EQ(grid[i].probs.px, levels[i % 4]);
        EXPECT_EQ(grid[i].probs.py, levels[i / 4]);
        EXPECT_EQ(grid[i].probs.pz, 3e-7);
    }
    EXPECT_EQ(grid[4].probs.px, 1e-10);
    EXPECT_EQ(grid[4].probs.py, 1e-8);
    EXPECT_EQ(environment_grid()[0].probs.pz, 1e-10);
}

TEST(MetricTest, LogInfidelity) {
    EXPECT_DOUBLE_EQ(log_infidelity(0.9), 1.0);
    EXPECT_DOUBLE_EQ(log_infidelity(0.999), -std::log10(1.0 - 0.999));
    EXPECT_EQ(log_infidelity(1.0), kLogInfidelityCap);
    EXPECT_EQ(log_infidelity_of(0.0), kLogInfidelityCap);
    EXPECT_EQ(log_infidelity_of(1e-20), kLogInfidelityCap);
    EXPECT_DOUBLE_EQ(log_infidelity_of(1e-3), 3.0);
    EXPECT_DOUBLE_EQ(log_infidelity(0.0), 0.0);
}

TEST(MetricTest, DMetricSign) {
    RunResult steane, shor;
    steane.log_infidelity = 5.0;
    shor.log_infidelity = 4.5;
    EXPECT_DOUBLE_EQ(d_metric(steane, shor).value, 0.5);
    EXPECT_EQ(d_metric(steane, shor).steane_wins, 1);
    EXPECT_EQ(d_metric(shor, steane).steane_wins, -1);
    EXPECT_EQ(d_metric(shor, shor).steane_wins, 0);
}

TEST(RankingTest, HigherLogInfidelityThenFidelityThenEarlierOrder) {
    EXPECT_TRUE(order_outranks(5.0, 0.9, 4.0, 0.95));
    EXPECT_TRUE(order_outranks(15.0, 1.0, 15.0, 0.999));
    EXPECT_FALSE(order_outranks(15.0, 1.0, 15.0, 1.0));
    std::vector<RunResult> rs(4);
    for (std::size_t i = 0; i < 4; ++i) {
        rs[i].config.order = all_orders()[i];
        rs[i].log_infidelity = 3.0;
        rs[i].fidelity = 0.999;
    }
    EXPECT_EQ(best_order(rs), SyndromeOrder::XZXZ);
    rs[2].log_infidelity = 3.5;
    EXPECT_EQ(best_order(rs), SyndromeOrder::ZXXZ);
}

// Single-qubit matrices written out directly, independent of the gate kernels.
PureState reference_logical(const std::vector<LogicalGate>& gates) {
    const double h = std::numbers::sqrt2 / 2;
    std::complex<double> a = 1, b = 0;
    for (auto g : gates) {
        switch (g) {
            case LogicalGate::H: {
                const auto na = h * (a + b), nb = h * (a - b);
                a = na;
                b = nb;
                break;
            }
            case LogicalGate::S:
                b *= std::complex<double>(0, 1);
                break;
            case LogicalGate::T:
                b *= std::polar(1.0, std::numbers::pi / 4);
                break;
        }
    }
    PureState q(1);
    q[0] = a;
    q[1] = b;
    return q;
}

TEST(IdealOutputTest, MatchesHandComputedLogicalState) {
    for (const char* seq : {"A", "B", "ABBB", kFullSequence}) {
        const auto gates = expand_sequence(seq);
        EXPECT_NEAR(overlap_sq(ideal_output(gates), steane::encode(reference_logical(gates))), 1.0, 1e-12) << seq;
    }
}

TEST(RunTest, FaultSiteTotalsFollowFromPartCounts) {
    // 7 sites per transversal Clifford, 55 per T injection, one round per primitive.
    for (auto method : {SMethod::Shor, SMethod::Steane}) {
        RunConfig c;
        c.env.probs = {0, 0, 0};
        c.method = method;
        const auto round = method == SMethod::Shor ? 396u : 424u;
        const auto gates = expand_sequence("ABBB");
        const auto t = std::count(gates.begin(), gates.end(), LogicalGate::T);
        const auto expected = gates.size() * round + (gates.size() - t) * 7 + t * 55;
        const auto r = run(c);
        EXPECT_EQ(r.fault_sites, expected);
        EXPECT_EQ(r.primitives, 9u);
        EXPECT_EQ(r.fault_sites, method == SMethod::Shor ? 3819u : 4071u);
    }
}

TEST(RunTest, ZeroNoiseIsPerfect) {
    for (auto method : {SMethod::Shor, SMethod::Steane}) {
        for (auto order : all_orders()) {
            RunConfig c;
            c.env.probs = {0, 0, 0};
            c.method = method;
            c.order = order;
            const auto r = run(c);
            EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
            // Each of the four T injections keeps readout outcome 0 only.
            EXPECT_NEAR(r.accepted_mass, 1.0 / 16, 1e-12);
            EXPECT_EQ(r.log_infidelity, kLogInfidelityCap);
        }
    }
}

TEST(RunTest, MoreNoiseLowersFidelity) {
    RunConfig c;
    c.sequence = "B";
    double last = 1.0;
    for (double p : {1e-6, 1e-5, 1e-4}) {
        c.env.probs = {p, p, p};
        const auto r = run(c);
        EXPECT_LT(r.fidelity, last);
        EXPECT_GT(r.accepted_mass, 0.0);
        EXPECT_LT(r.accepted_mass, 1.0);
        EXPECT_GE(r.residual_bound, 0.0);
        last = r.fidelity;
    }
}

TEST(RunTest, InvalidProbabilitiesThrow) {
    RunConfig c;
    c.env.probs = {0.5, 0.4, 0.2};
    EXPECT_THROW(run(c), std::invalid_argument);
    c.env.probs = {-1e-3, 0, 0};
    EXPECT_THROW(run(c), std::invalid_argument);
}

TEST(RunTest, MonteCarloIsSeedDeterministic) {
    RunConfig c;
    c.sequence = "B";
    c.env.probs = {1e-3, 1e-3, 1e-3};
    c.truncation.mode = SimMode::MonteCarlo;
    c.truncation.samples = 2000;
    c.truncation.seed = 7;
    const auto a = run(c);
    const auto b = run(c);
    EXPECT_EQ(a.fidelity, b.fidelity);
    EXPECT_EQ(a.accepted_mass, b.accepted_mass);
    EXPECT_EQ(a.standard_error, b.standard_error);
    EXPECT_EQ(a.residual_bound, a.standard_error);
}

TEST(CompareTest, BestMatchesRanking) {
    RunConfig c;
    c.sequence = "B";
    c.env.probs = {1e-4, 1e-10, 1e-10};
    const auto cmp = compare_orders(c);
    ASSERT_EQ(cmp.results.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(cmp.results[i].config.order, all_orders()[i]);
    EXPECT_EQ(cmp.best, best_order(cmp.results));
}

TEST(SweepTest, WorkerCountDoesNotChangeResults) {
    RunConfig c;
    c.sequence = "B";
    auto grid = environment_grid();
    grid.resize(3);
    grid[2].probs.px = 1e-4;
    const std::vector<SyndromeOrder> orders{SyndromeOrder::XZXZ, SyndromeOrder::ZXXZ};
    const std::vector<SMethod> methods{SMethod::Shor};
    const auto one = sweep(c, grid, orders, methods, 1);
    const auto two = sweep(c, grid, orders, methods, 2);
    ASSERT_EQ(one.size(), 6u);
    ASSERT_EQ(two.size(), 6u);
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].config.env.grid_index, two[i].config.env.grid_index);
        EXPECT_EQ(one[i].config.order, two[i].config.order);
        EXPECT_EQ(one[i].fidelity, two[i].fidelity);
        EXPECT_EQ(one[i].accepted_mass, two[i].accepted_mass);
    }
    EXPECT_EQ(one[0].config.env.grid_index, 1);
    EXPECT_EQ(one[5].config.env.grid_index, 3);
}

}  // namespace
}  // namespace qecsim
