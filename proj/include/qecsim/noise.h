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

#ifndef QECSIM_NOISE_H
#define QECSIM_NOISE_H

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qecsim/circuit.h"
#include "qecsim/state.h"

namespace qecsim {

enum class Pauli { X, Y, Z };

std::string pauli_name(Pauli p);
GateKind pauli_gate(Pauli p);

/// Per-site probabilities of a sigma_x, sigma_y and sigma_z error.
struct ErrorProbabilities {
    double px = 0.0;
    double py = 0.0;
    double pz = 0.0;

    double total() const { return px + py + pz; }
    double quiet() const { return 1.0 - total(); }
    double of(Pauli p) const;
    /// Throws std::invalid_argument unless 0 <= px, py, pz and px+py+pz <= 1.
    void validate() const;
};

/// Pattern or frame counts beyond a configured cap.
class SizingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One qubit taking part in one operation of a flattened circuit. Faults
/// strike after gates and initializations and before measurements.
struct FaultSite {
    std::size_t op_index = 0;
    Wire wire = 0;

    bool operator==(const FaultSite&) const = default;
};

struct FaultEvent {
    std::size_t site = 0;  // index into the site list
    Pauli pauli = Pauli::X;
};

struct ErrorPattern {
    std::vector<FaultEvent> events;  // sorted by site, at most one per site
    double weight = 1.0;
};

struct PatternSet {
    std::vector<ErrorPattern> patterns;
    /// 1 - sum of pattern weights: the probability mass of patterns with more
    /// than K events.
    double residual = 0.0;
};

/// Sites of a circuit (flattened first) in execution order.
std::vector<FaultSite> enumerate_fault_sites(const Circuit& circuit);

/// Every pattern with at most `max_weight` events and its exact probability.
/// Throws SizingError when the pattern count would exceed `cap`.
PatternSet enumerate_patterns(std::size_t num_sites, const ErrorProbabilities& probs, int max_weight,
                              std::uint64_t cap = 50'000'000);

/// Number of patterns with at most `max_weight` events over `num_sites` sites.
double pattern_count(std::size_t num_sites, int max_weight);

/// Draws every site independently. The returned weight is 1.
ErrorPattern sample_pattern(std::size_t num_sites, const ErrorProbabilities& probs, std::mt19937_64& rng);

/// Applies the Pauli to register position `qubit`.
void apply_fault(PureState& state, int qubit, Pauli pauli);

/// Probability that more than `max_weight` of `num_sites` independent sites
/// fault, each with probability `p`. Summed directly over the tail so that
/// tiny values keep full relative precision.
double binomial_tail(std::uint64_t num_sites, double p, int max_weight);

}  // namespace qecsim

#endif  // QECSIM_NOISE_H
