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

#include "qecsim/noise.h"

#include <cmath>

#include "overloaded.h"

namespace qecsim {

using internal::Overloaded;

std::string pauli_name(Pauli p) {
    switch (p) {
        case Pauli::X: return "X";
        case Pauli::Y: return "Y";
        case Pauli::Z: return "Z";
    }
    return "?";
}

GateKind pauli_gate(Pauli p) {
    switch (p) {
        case Pauli::X: return GateKind::X;
        case Pauli::Y: return GateKind::Y;
        case Pauli::Z: return GateKind::Z;
    }
    return GateKind::X;
}

double ErrorProbabilities::of(Pauli p) const {
    switch (p) {
        case Pauli::X: return px;
        case Pauli::Y: return py;
        case Pauli::Z: return pz;
    }
    return 0.0;
}

void ErrorProbabilities::validate() const {
    if (!(px >= 0.0 && py >= 0.0 && pz >= 0.0) || total() > 1.0) {
        throw std::invalid_argument("error probabilities must be non-negative and sum to at most 1");
    }
}

std::vector<FaultSite> enumerate_fault_sites(const Circuit& circuit) {
    const Circuit flat = flatten(circuit);
    std::vector<FaultSite> sites;
    for (std::size_t i = 0; i < flat.ops.size(); ++i) {
        std::visit(Overloaded{
                       [&](const GateOp& g) {
                           if (!g.noisy) return;
                           sites.push_back({i, g.wire});
                           if (g.kind == GateKind::CNOT) sites.push_back({i, g.target});
                       },
                       [&](const InitOp& op) {
                           if (op.noisy) sites.push_back({i, op.wire});
                       },
                       [&](const MeasureOp& m) {
                           if (m.noisy) sites.push_back({i, m.wire});
                       },
                       [](const auto&) {},
                   },
                   flat.ops[i]);
    }
    return sites;
}

double pattern_count(std::size_t num_sites, int max_weight) {
    double total = 0.0;
    double choose = 1.0;
    double threes = 1.0;
    for (int k = 0; k <= max_weight && k <= static_cast<int>(num_sites); ++k) {
        total += choose * threes;
        choose = choose * static_cast<double>(num_sites - k) / (k + 1);
        threes *= 3.0;
    }
    return total;
}

PatternSet enumerate_patterns(std::size_t num_sites, const ErrorProbabilities& probs, int max_weight,
                              std::uint64_t cap) {
    probs.validate();
    if (max_weight < 0 || static_cast<std::size_t>(max_weight) > num_sites) {
        throw std::invalid_argument("truncation weight must lie in [0, number of sites]");
    }
    if (pattern_count(num_sites, max_weight) > static_cast<double>(cap)) {
        throw SizingError("enumerating " + std::to_string(num_sites) + " sites to weight " +
                          std::to_string(max_weight) + " exceeds the pattern cap of " + std::to_string(cap));
    }
    PatternSet out;
    const double quiet = probs.quiet();
    constexpr Pauli kPaulis[] = {Pauli::X, Pauli::Y, Pauli::Z};
    ErrorPattern current;

    // Depth-first over increasing site indices; each recursion level adds one event.
    auto weight_of = [&](const ErrorPattern& p) {
        double w = std::pow(quiet, static_cast<double>(num_sites - p.events.size()));
        for (const auto& e : p.events) w *= probs.of(e.pauli);
        return w;
    };
    auto recurse = [&](auto&& self, std::size_t first) -> void {
        current.weight = weight_of(current);
        out.patterns.push_back(current);
        if (static_cast<int>(current.events.size()) == max_weight) return;
        for (std::size_t s = first; s < num_sites; ++s) {
            for (Pauli p : kPaulis) {
                current.events.push_back({s, p});
                self(self, s + 1);
                current.events.pop_back();
            }
        }
    };
    recurse(recurse, 0);
    out.residual = binomial_tail(num_sites, probs.total(), max_weight);
    return out;
}

ErrorPattern sample_pattern(std::size_t num_sites, const ErrorProbabilities& probs, std::mt19937_64& rng) {
    probs.validate();
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    ErrorPattern pattern;
    for (std::size_t s = 0; s < num_sites; ++s) {
        const double u = uniform(rng);
        if (u < probs.px) {
            pattern.events.push_back({s, Pauli::X});
        } else if (u < probs.px + probs.py) {
            pattern.events.push_back({s, Pauli::Y});
        } else if (u < probs.total()) {
            pattern.events.push_back({s, Pauli::Z});
        }
    }
    return pattern;
}

void apply_fault(PureState& state, int qubit, Pauli pauli) { apply_gate(state, {pauli_gate(pauli), qubit}); }

double binomial_tail(std::uint64_t num_sites, double p, int max_weight) {
    if (p <= 0.0 || static_cast<std::uint64_t>(max_weight) >= num_sites) return 0.0;
    if (p >= 1.0) return 1.0;
    const double n = static_cast<double>(num_sites);
    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);
    double tail = 0.0;
    for (std::uint64_t k = max_weight + 1; k <= num_sites; ++k) {
        const double kk = static_cast<double>(k);
        const double log_term =
            std::lgamma(n + 1) - std::lgamma(kk + 1) - std::lgamma(n - kk + 1) + kk * log_p + (n - kk) * log_q;
        const double term = std::exp(log_term);
        tail += term;
        // Past the mode the terms fall geometrically.
        if (kk > n * p + 1 && term < 1e-18 * tail) break;
    }
    return std::min(tail, 1.0);
}

}  // namespace qecsim
