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

// Exact noisy simulation by Pauli frames.
//
// The register is held as a small set of ideal branches. Each branch stores
// the noiseless state for one run of measurement outcomes together with a
// list of weighted Pauli frames: the accumulated error operator, the record
// bits it has flipped so far and a tag. Faults only ever multiply frames by
// Paulis, so every error pattern is accounted for without re-running the
// state vector. Frames that differ by an element of the branch's stabilizer
// group describe the same physical state and are merged.
//
// The tag holds the fault count in Enumerate mode (frames stop branching at
// max_weight), is unused in exhaustive mode and is the sample id in
// MonteCarlo mode, where each fault site draws one Pauli per sample from a
// counter-based hash of (seed, site, sample).

#ifndef QECSIM_FRAME_ENSEMBLE_H
#define QECSIM_FRAME_ENSEMBLE_H

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qecsim/circuit.h"
#include "qecsim/noise.h"
#include "qecsim/pauli_frame.h"
#include "qecsim/state.h"

namespace qecsim {

enum class SimMode { Enumerate, MonteCarlo };

struct TruncationConfig {
    SimMode mode = SimMode::Enumerate;
    /// Largest number of faults followed. Empty means every pattern.
    std::optional<int> max_weight = 2;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    std::uint64_t frame_cap = 50'000'000;
};

struct Frame {
    PauliMask pauli;
    std::uint32_t tag = 0;
    std::uint64_t flips = 0;
    double weight = 1.0;
};

struct IdealBranch {
    PureState state;
    StabilizerGroup group;
    Record record = 0;
    std::vector<Frame> frames;
    bool canonical = true;
};

struct Ensemble {
    std::vector<Wire> wires;  // register position -> wire
    std::vector<IdealBranch> branches;

    int position(Wire wire) const;
    double total_weight() const;
    std::size_t frame_count() const;
};

struct FidelityEstimate {
    double fidelity = 0.0;
    /// Accumulated directly as sum w (1 - overlap) / sum w, which keeps its
    /// relative precision when the fidelity is close to 1.
    double infidelity = 1.0;
    /// Sum of accepted frame weights. In MonteCarlo mode, divided by the
    /// sample count.
    double accepted_mass = 0.0;
    /// Ratio-estimator standard error; zero outside MonteCarlo mode.
    double standard_error = 0.0;
};

class EnsembleSimulator {
  public:
    EnsembleSimulator(ErrorProbabilities probs, TruncationConfig config);

    /// Empty register with one frame, or one frame per sample.
    Ensemble initial() const;
    void run(const Circuit& circuit, Ensemble& ensemble);

    /// Postselected fidelity against `ideal`, whose qubit i is wire order[i].
    /// Every live wire must appear in `order`.
    FidelityEstimate fidelity(const Ensemble& ensemble, const PureState& ideal, const std::vector<Wire>& order) const;

    std::size_t peak_frames() const { return peak_frames_; }

  private:
    void run_op(const CircuitOp& op, Ensemble& ens, bool noisy);
    void gate(const GateOp& g, Ensemble& ens, bool noisy);
    void init(const InitOp& op, Ensemble& ens, bool noisy);
    void measure(const MeasureOp& m, Ensemble& ens, bool noisy);
    void discard(const DiscardOp& d, Ensemble& ens);
    void classical(const ClassicalOp& c, Ensemble& ens);
    void prepare(const PrepareOp& p, Ensemble& ens, bool noisy);
    void fault(Ensemble& ens, int position);
    void merge(IdealBranch& branch);
    void check_size(const Ensemble& ens);

    ErrorProbabilities probs_;
    TruncationConfig config_;
    std::uint64_t site_counter_ = 0;
    std::size_t peak_frames_ = 0;
    std::map<std::pair<const Circuit*, bool>, Ensemble> cache_;
};

/// Hash-derived uniform in [0, 1) for one (seed, site, sample) triple.
double site_uniform(std::uint64_t seed, std::uint64_t site, std::uint64_t sample);

}  // namespace qecsim

#endif  // QECSIM_FRAME_ENSEMBLE_H
