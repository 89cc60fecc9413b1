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

#include "qecsim/frame_ensemble.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "overloaded.h"

namespace qecsim {

using internal::Overloaded;

namespace {

constexpr double kSameState = 1.0 - 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint32_t bit(int position) { return std::uint32_t{1} << position; }

PauliMask single(Pauli p, int position) {
    switch (p) {
        case Pauli::X: return {bit(position), 0};
        case Pauli::Y: return {bit(position), bit(position)};
        case Pauli::Z: return {0, bit(position)};
    }
    return {};
}

PauliMask gate_mask(GateKind kind, int position) {
    switch (kind) {
        case GateKind::X: return single(Pauli::X, position);
        case GateKind::Y: return single(Pauli::Y, position);
        case GateKind::Z: return single(Pauli::Z, position);
        default: break;
    }
    throw std::logic_error("frame simulation supports Pauli corrections only, got " + gate_name(kind));
}

bool frame_less(const Frame& a, const Frame& b) {
    if (a.pauli.packed() != b.pauli.packed()) return a.pauli.packed() < b.pauli.packed();
    if (a.flips != b.flips) return a.flips < b.flips;
    return a.tag < b.tag;
}

bool frame_same(const Frame& a, const Frame& b) {
    return a.pauli == b.pauli && a.flips == b.flips && a.tag == b.tag;
}

// Frame mask rearranged so that bit i refers to register position order[i].
PauliMask gather(PauliMask p, const std::vector<int>& positions) {
    PauliMask out;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (p.x >> positions[i] & 1) out.x |= bit(static_cast<int>(i));
        if (p.z >> positions[i] & 1) out.z |= bit(static_cast<int>(i));
    }
    return out;
}

}  // namespace

double site_uniform(std::uint64_t seed, std::uint64_t site, std::uint64_t sample) {
    const std::uint64_t h = splitmix64(seed ^ splitmix64(site ^ splitmix64(sample + 0x632be59bd9b4e019ULL)));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

int Ensemble::position(Wire wire) const {
    auto it = std::find(wires.begin(), wires.end(), wire);
    if (it == wires.end()) throw std::logic_error("wire " + std::to_string(wire) + " is not live in the register");
    return static_cast<int>(it - wires.begin());
}

double Ensemble::total_weight() const {
    double total = 0.0;
    for (const auto& b : branches) {
        for (const auto& f : b.frames) total += f.weight;
    }
    return total;
}

std::size_t Ensemble::frame_count() const {
    std::size_t n = 0;
    for (const auto& b : branches) n += b.frames.size();
    return n;
}

EnsembleSimulator::EnsembleSimulator(ErrorProbabilities probs, TruncationConfig config)
    : probs_(probs), config_(config) {
    probs_.validate();
    if (config_.max_weight && *config_.max_weight < 0) throw std::invalid_argument("truncation weight must be >= 0");
    if (config_.mode == SimMode::MonteCarlo && config_.samples == 0) {
        throw std::invalid_argument("Monte Carlo mode needs at least one sample");
    }
    if (config_.mode == SimMode::MonteCarlo && config_.samples > UINT32_MAX) {
        throw std::invalid_argument("sample count exceeds 2^32 - 1");
    }
}

Ensemble EnsembleSimulator::initial() const {
    Ensemble ens;
    IdealBranch b{PureState(0), StabilizerGroup(0), 0, {}, true};
    if (config_.mode == SimMode::MonteCarlo) {
        b.frames.reserve(config_.samples);
        for (std::uint64_t s = 0; s < config_.samples; ++s) b.frames.push_back({{}, static_cast<std::uint32_t>(s), 0, 1.0});
    } else {
        b.frames.push_back({});
    }
    ens.branches.push_back(std::move(b));
    return ens;
}

void EnsembleSimulator::run(const Circuit& circuit, Ensemble& ensemble) {
    for (const auto& op : circuit.ops) run_op(op, ensemble, true);
}

void EnsembleSimulator::run_op(const CircuitOp& op, Ensemble& ens, bool noisy) {
    std::visit(Overloaded{
                   [&](const GateOp& g) { gate(g, ens, noisy && g.noisy); },
                   [&](const InitOp& i) { init(i, ens, noisy && i.noisy); },
                   [&](const MeasureOp& m) { measure(m, ens, noisy && m.noisy); },
                   [&](const DiscardOp& d) { discard(d, ens); },
                   [&](const ClassicalOp& c) { classical(c, ens); },
                   [&](const PrepareOp& p) { prepare(p, ens, noisy && p.noisy); },
               },
               op);
}

void EnsembleSimulator::check_size(const Ensemble& ens) {
    const std::size_t n = ens.frame_count();
    peak_frames_ = std::max(peak_frames_, n);
    if (n > config_.frame_cap) {
        throw SizingError("frame count " + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(config_.frame_cap) + "; lower --trunc-weight or shorten --sequence");
    }
}

void EnsembleSimulator::merge(IdealBranch& branch) {
    auto& frames = branch.frames;
    for (auto& f : frames) f.pauli = branch.group.reduce(f.pauli);
    branch.canonical = true;
    std::sort(frames.begin(), frames.end(), frame_less);
    std::size_t out = 0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (out > 0 && frame_same(frames[out - 1], frames[i])) {
            frames[out - 1].weight += frames[i].weight;
        } else {
            frames[out++] = frames[i];
        }
    }
    frames.resize(out);
    std::erase_if(frames, [](const Frame& f) { return f.weight == 0.0; });
}

void EnsembleSimulator::fault(Ensemble& ens, int position) {
    const std::uint64_t site = site_counter_++;
    if (probs_.total() == 0.0) return;
    constexpr Pauli kPaulis[] = {Pauli::X, Pauli::Y, Pauli::Z};
    if (config_.mode == SimMode::MonteCarlo) {
        const double px = probs_.px;
        const double pxy = probs_.px + probs_.py;
        const double total = probs_.total();
        for (auto& b : ens.branches) {
            for (auto& f : b.frames) {
                const double u = site_uniform(config_.seed, site, f.tag);
                if (u >= total) continue;
                const Pauli p = u < px ? Pauli::X : (u < pxy ? Pauli::Y : Pauli::Z);
                f.pauli = f.pauli * single(p, position);
            }
        }
        return;
    }
    const double quiet = probs_.quiet();
    for (auto& b : ens.branches) {
        if (!b.canonical) merge(b);
        const std::size_t parents = b.frames.size();
        for (std::size_t i = 0; i < parents; ++i) {
            const Frame parent = b.frames[i];
            const bool can_branch = !config_.max_weight || static_cast<int>(parent.tag) < *config_.max_weight;
            if (can_branch) {
                for (Pauli p : kPaulis) {
                    const double w = probs_.of(p);
                    if (w == 0.0) continue;
                    Frame child = parent;
                    child.pauli = b.group.reduce(parent.pauli * single(p, position));
                    child.weight = parent.weight * w;
                    if (config_.max_weight) ++child.tag;
                    b.frames.push_back(child);
                }
            }
            b.frames[i].weight *= quiet;
        }
        merge(b);
    }
    check_size(ens);
}

void EnsembleSimulator::gate(const GateOp& g, Ensemble& ens, bool noisy) {
    const int q = ens.position(g.wire);
    const int t = g.kind == GateKind::CNOT ? ens.position(g.target) : -1;
    const Gate dense{g.kind, q, t};
    if (g.kind == GateKind::T) {
        std::vector<IdealBranch> spawned;
        for (auto& b : ens.branches) {
            IdealBranch flipped{b.state, b.group, b.record, {}, false};
            std::vector<Frame> stay;
            for (auto& f : b.frames) {
                if (f.pauli.x & bit(q)) {
                    Frame moved = f;
                    moved.pauli.x ^= bit(q);
                    flipped.frames.push_back(moved);
                } else {
                    stay.push_back(f);
                }
            }
            b.frames = std::move(stay);
            if (!flipped.frames.empty()) {
                apply_gate(flipped.state, {GateKind::X, q});
                spawned.push_back(std::move(flipped));
            }
        }
        for (auto& s : spawned) ens.branches.push_back(std::move(s));
        std::erase_if(ens.branches, [](const IdealBranch& b) { return b.frames.empty(); });
    }
    for (auto& b : ens.branches) {
        apply_gate(b.state, dense);
        if (!is_pauli(g.kind)) {
            b.group.conjugate(dense);
            if (g.kind != GateKind::T) {
                for (auto& f : b.frames) f.pauli = conjugate(f.pauli, dense);
            }
            b.canonical = false;
        }
    }
    if (noisy) {
        fault(ens, q);
        if (t >= 0) fault(ens, t);
    }
}

void EnsembleSimulator::init(const InitOp& op, Ensemble& ens, bool noisy) {
    if (std::find(ens.wires.begin(), ens.wires.end(), op.wire) != ens.wires.end()) {
        throw std::logic_error("init of a live wire " + std::to_string(op.wire));
    }
    if (ens.wires.size() >= 32) throw SizingError("more than 32 live qubits");
    const int pos = static_cast<int>(ens.wires.size());
    ens.wires.push_back(op.wire);
    for (auto& b : ens.branches) {
        b.state = tensor(b.state, PureState(1));
        b.group.add_qubit();
        if (op.state == InitState::Plus) {
            apply_gate(b.state, {GateKind::H, pos});
            b.group.add({bit(pos), 0});
        } else {
            b.group.add({0, bit(pos)});
        }
        b.canonical = false;
    }
    if (noisy) fault(ens, pos);
}

void EnsembleSimulator::measure(const MeasureOp& m, Ensemble& ens, bool noisy) {
    const int q = ens.position(m.wire);
    if (noisy) fault(ens, q);
    if (m.slot < 0 || m.slot >= 64) throw std::out_of_range("record slot outside 0..63");
    const PauliMask observable = m.basis == Basis::Z ? PauliMask{0, bit(q)} : PauliMask{bit(q), 0};
    std::vector<IdealBranch> next;
    for (auto& b : ens.branches) {
        StabilizerGroup group = b.group;
        group.measure(observable);
        // A stabilizer s anticommuting with the observable makes the outcome
        // uniform and maps the 0 branch onto the 1 branch, so outcome 1 is
        // carried by frames multiplied by s instead of a new ideal branch.
        std::optional<PauliMask> flipper;
        for (auto g : b.group.generators()) {
            if (anticommute(g, observable)) {
                flipper = g;
                break;
            }
        }
        if (flipper) {
            auto proj = project(b.state, q, m.basis, 0);
            if (!proj.state) throw std::logic_error("stabilized measurement lost its 0 outcome");
            IdealBranch child{std::move(*proj.state), group, b.record, {}, false};
            child.frames.reserve(2 * b.frames.size());
            for (const auto& f : b.frames) {
                for (PauliMask p : {f.pauli, f.pauli * *flipper}) {
                    Frame g = f;
                    g.pauli = p;
                    g.weight *= 0.5;
                    if (anticommute(p, observable)) g.flips |= std::uint64_t{1} << m.slot;
                    child.frames.push_back(g);
                }
            }
            merge(child);
            next.push_back(std::move(child));
            continue;
        }
        for (int r = 0; r < 2; ++r) {
            auto proj = project(b.state, q, m.basis, r);
            if (!proj.state) continue;
            IdealBranch child{std::move(*proj.state), group, b.record, b.frames, false};
            if (r) child.record |= Record{1} << m.slot;
            for (auto& f : child.frames) {
                f.weight *= proj.probability;
                if (anticommute(f.pauli, observable)) f.flips |= std::uint64_t{1} << m.slot;
            }
            merge(child);
            next.push_back(std::move(child));
        }
    }
    ens.branches = std::move(next);
    check_size(ens);
}

void EnsembleSimulator::discard(const DiscardOp& d, Ensemble& ens) {
    const int q = ens.position(d.wire);
    for (auto& b : ens.branches) {
        b.state = qecsim::discard(b.state, q);
        b.group.remove_qubit(q);
        for (auto& f : b.frames) f.pauli = remove_position(f.pauli, q);
        merge(b);
    }
    ens.wires.erase(ens.wires.begin() + q);
}

void EnsembleSimulator::classical(const ClassicalOp& c, Ensemble& ens) {
    if (c.fold) {
        for (auto& b : ens.branches) {
            const Record folded = c.decode(b.record);
            for (auto& f : b.frames) f.flips = c.decode(b.record ^ f.flips) ^ folded;
            b.record = folded;
            merge(b);
        }
        return;
    }
    for (auto& b : ens.branches) {
        std::vector<Frame> kept;
        kept.reserve(b.frames.size());
        for (auto f : b.frames) {
            const Record observed = b.record ^ f.flips;
            const std::uint64_t value = c.decode ? c.decode(observed) : observed;
            if (c.accept && !c.accept(value)) continue;
            if (c.correct) {
                for (const auto& g : c.correct(value)) f.pauli = f.pauli * gate_mask(g.kind, ens.position(g.wire));
            }
            f.flips = 0;
            kept.push_back(f);
        }
        b.frames = std::move(kept);
        b.record = 0;
        merge(b);
    }
    std::erase_if(ens.branches, [](const IdealBranch& b) { return b.frames.empty(); });
    // Branches that now hold the same state up to phase carry frames on a
    // common footing and can be pooled.
    std::vector<IdealBranch> pooled;
    for (auto& b : ens.branches) {
        bool absorbed = false;
        for (auto& p : pooled) {
            if (p.group == b.group && overlap_sq(p.state, b.state) > kSameState) {
                p.frames.insert(p.frames.end(), b.frames.begin(), b.frames.end());
                merge(p);
                absorbed = true;
                break;
            }
        }
        if (!absorbed) pooled.push_back(std::move(b));
    }
    ens.branches = std::move(pooled);
}

void EnsembleSimulator::prepare(const PrepareOp& p, Ensemble& ens, bool noisy) {
    const Circuit& sub = *p.circuit;
    if (!sub.inputs.empty()) throw std::invalid_argument("prepared circuit " + sub.name + " takes inputs");
    if (sub.outputs.size() != p.outputs.size()) throw std::invalid_argument("prepare op output count mismatch");
    const bool effective_noise = noisy && probs_.total() > 0.0;
    const bool fresh = effective_noise && config_.mode == SimMode::MonteCarlo;

    auto build = [&](bool with_noise) {
        Ensemble e;
        IdealBranch root{PureState(0), StabilizerGroup(0), 0, {}, true};
        if (fresh) {
            root.frames = initial().branches.front().frames;
        } else {
            root.frames.push_back({});
        }
        e.branches.push_back(std::move(root));
        for (const auto& op : sub.ops) run_op(op, e, with_noise);
        return e;
    };

    const Ensemble* prepared = nullptr;
    Ensemble local;
    if (fresh) {
        local = build(true);
        prepared = &local;
    } else {
        auto key = std::make_pair(p.circuit.get(), effective_noise);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            // Reuse does not advance the Monte Carlo site counter; the cache is
            // only consulted outside that mode or for noiseless preparation.
            it = cache_.emplace(key, build(effective_noise)).first;
        }
        prepared = &it->second;
    }

    // Rename the sub-circuit's output wires to the parent's ids.
    std::vector<Wire> renamed;
    for (Wire w : prepared->wires) {
        auto it = std::find(sub.outputs.begin(), sub.outputs.end(), w);
        if (it == sub.outputs.end()) throw std::logic_error("prepared circuit " + sub.name + " leaves wire " +
                                                            std::to_string(w) + " live");
        const Wire parent = p.outputs[it - sub.outputs.begin()];
        if (std::find(ens.wires.begin(), ens.wires.end(), parent) != ens.wires.end()) {
            throw std::logic_error("prepare into live wire " + std::to_string(parent));
        }
        renamed.push_back(parent);
    }
    if (renamed.size() != sub.outputs.size()) throw std::logic_error("prepared circuit " + sub.name + " lost outputs");
    const int shift = static_cast<int>(ens.wires.size());
    if (shift + renamed.size() > 32) throw SizingError("more than 32 live qubits");

    const bool pair_by_sample = fresh;
    const bool pair_by_weight = !fresh && effective_noise && config_.mode == SimMode::Enumerate && config_.max_weight;
    std::vector<IdealBranch> combined;
    for (const auto& a : ens.branches) {
        for (const auto& b : prepared->branches) {
            IdealBranch out{tensor(a.state, b.state), a.group, a.record | b.record, {}, false};
            out.group.append(b.group);
            auto shifted = [&](const Frame& fa, const Frame& fb, std::uint32_t tag) {
                Frame f;
                f.pauli = {fa.pauli.x | (fb.pauli.x << shift), fa.pauli.z | (fb.pauli.z << shift)};
                f.tag = tag;
                f.flips = fa.flips | fb.flips;
                f.weight = fa.weight * fb.weight;
                return f;
            };
            if (pair_by_sample) {
                std::vector<Frame> sorted_b = b.frames;
                std::sort(sorted_b.begin(), sorted_b.end(),
                          [](const Frame& x, const Frame& y) { return x.tag < y.tag; });
                for (const auto& fa : a.frames) {
                    auto range = std::equal_range(sorted_b.begin(), sorted_b.end(), fa,
                                                  [](const Frame& x, const Frame& y) { return x.tag < y.tag; });
                    for (auto it = range.first; it != range.second; ++it) out.frames.push_back(shifted(fa, *it, fa.tag));
                }
            } else {
                for (const auto& fa : a.frames) {
                    for (const auto& fb : b.frames) {
                        if (pair_by_weight) {
                            const std::uint32_t k = fa.tag + fb.tag;
                            if (static_cast<int>(k) > *config_.max_weight) continue;
                            out.frames.push_back(shifted(fa, fb, k));
                        } else {
                            out.frames.push_back(shifted(fa, fb, fa.tag));
                        }
                    }
                }
            }
            merge(out);
            if (!out.frames.empty()) combined.push_back(std::move(out));
        }
    }
    ens.branches = std::move(combined);
    ens.wires.insert(ens.wires.end(), renamed.begin(), renamed.end());
    check_size(ens);
}

FidelityEstimate EnsembleSimulator::fidelity(const Ensemble& ens, const PureState& ideal,
                                             const std::vector<Wire>& order) const {
    if (order.size() != ens.wires.size()) {
        throw std::invalid_argument("fidelity order names " + std::to_string(order.size()) + " wires but " +
                                    std::to_string(ens.wires.size()) + " are live");
    }
    std::vector<int> positions;
    for (Wire w : order) positions.push_back(ens.position(w));
    const bool mc = config_.mode == SimMode::MonteCarlo;
    std::vector<double> num(mc ? config_.samples : 0, 0.0);
    std::vector<double> den(mc ? config_.samples : 0, 0.0);
    double numerator = 0.0;
    double loss = 0.0;
    double denominator = 0.0;
    for (const auto& b : ens.branches) {
        const PureState state = permute_qubits(b.state, positions);
        for (const auto& f : b.frames) {
            const double ov = std::norm(masked_inner_product(ideal, gather(f.pauli, positions), state));
            numerator += f.weight * ov;
            loss += f.weight * std::max(0.0, 1.0 - ov);
            denominator += f.weight;
            if (mc) {
                num[f.tag] += f.weight * ov;
                den[f.tag] += f.weight;
            }
        }
    }
    FidelityEstimate out;
    out.accepted_mass = denominator;
    out.fidelity = denominator > 0.0 ? numerator / denominator : 0.0;
    out.infidelity = denominator > 0.0 ? loss / denominator : 1.0;
    if (mc) {
        const double n = static_cast<double>(config_.samples);
        out.accepted_mass = denominator / n;
        if (config_.samples > 1 && denominator > 0.0) {
            double ss = 0.0;
            for (std::size_t s = 0; s < num.size(); ++s) {
                const double r = num[s] - out.fidelity * den[s];
                ss += r * r;
            }
            const double mean_a = denominator / n;
            out.standard_error = std::sqrt(ss / (n * (n - 1.0))) / mean_a;
        }
    }
    return out;
}

}  // namespace qecsim
