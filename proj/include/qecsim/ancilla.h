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

#ifndef QECSIM_ANCILLA_H
#define QECSIM_ANCILLA_H

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qecsim/circuit.h"
#include "qecsim/noise.h"
#include "qecsim/state.h"

namespace qecsim {

enum class AncillaKind { Shor, SteaneZero, SteanePlus, Theta };

std::string ancilla_name(AncillaKind kind);

/// Four-qubit cat state (|0000> + |1111>)/sqrt2 built by a CNOT chain and
/// checked by the parity of its two end qubits on a fifth qubit. Outputs are
/// local wires 0..3; the Hadamard layer is left to the caller.
std::shared_ptr<const Circuit> shor_circuit();

/// Encoded |0_L> or |+_L> verified against a second encoded copy: the copy
/// is the CNOT target and is read in Z for |0_L>, and the CNOT control read
/// in X for |+_L>. Accepts a readout with trivial syndrome and even parity.
/// With verify=false only the kept copy is encoded.
std::shared_ptr<const Circuit> steane_ancilla_circuit(AncillaKind kind, bool verify = true);

/// (|0_L> + e^{i pi/4}|1_L>)/sqrt2 by H and T on qubit 1 followed by the
/// encoder. No verification.
std::shared_ptr<const Circuit> theta_circuit();

std::shared_ptr<const Circuit> ancilla_circuit(AncillaKind kind);

/// The state a noiseless, accepted preparation outputs.
PureState ideal_ancilla(AncillaKind kind);

struct VerifiedAncilla {
    PureState state;
    double accept_prob = 0.0;
    /// Decoded verification values of the heaviest accepted branch.
    std::vector<std::uint64_t> log;
};

/// Dense execution of the preparation under one explicit error pattern.
/// `state` is empty (0 qubits) when nothing is accepted.
VerifiedAncilla prepare_ancilla(AncillaKind kind, const ErrorPattern& pattern = {});

struct FaultOutcome {
    std::size_t site = 0;
    std::string op;
    Wire wire = 0;
    Pauli pauli = Pauli::X;
    double accept_prob = 0.0;
    /// Overlap of the accepted output with the ideal ancilla; 0 if rejected.
    double overlap = 0.0;
};

/// Every single fault (site x Pauli) in circuit order.
std::vector<FaultOutcome> single_fault_sweep(AncillaKind kind);

/// X part that a single X fault at `site` of the cat-state circuit leaves on
/// the four outputs, as a weight reduced modulo X^4 (0, 1 or 2). Weight 2 is
/// a corrupted cat: it cannot be absorbed by one later readout error.
int shor_residual_x_weight(std::size_t site);

/// Faults that pass verification yet leave the output different from the
/// ideal ancilla.
std::vector<FaultOutcome> undetected_faults(AncillaKind kind);

/// One line per fault: "site op wire pauli accept overlap".
std::string format_fault_report(const std::vector<FaultOutcome>& faults);

}  // namespace qecsim

#endif  // QECSIM_ANCILLA_H
