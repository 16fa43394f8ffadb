// Copyright 2026 The gqdec Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gq/decoder.hpp"
#include "gq/lattice.hpp"
#include "gq/noise.hpp"
#include "gq/rng.hpp"

namespace gq {

enum class Gate : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

std::string_view to_string(Gate g);

/// Bob's correction for Alice's outcomes: 00 -> I, 01 -> X, 10 -> Z, 11 -> Y.
/// m1 is the outcome on the teleported qubit, m2 the one on Alice's EPR half.
Gate recovery_gate(bool m1, bool m2);

/// Pauli error the gate contributes to a frame.
Pauli gate_pauli(Gate g);

/// Pauli frames of the three qubits in one teleportation: c carries the
/// input, a and b are the EPR halves held by Alice and Bob.
struct TeleportFrames {
    Pauli c;
    Pauli a;
    Pauli b;
};

/// Error injection points in the single-qubit protocol. Each field is the
/// Pauli applied at that location; identity everywhere is the ideal run.
struct TeleportFaults {
    Pauli input;     // on c before the protocol starts
    Pauli epr_a;     // after EPR preparation
    Pauli epr_b;
    Pauli cnot_c;    // after CNOT c -> a
    Pauli cnot_a;
    Pauli meas_c;    // after H on c, before measuring c and a
    Pauli meas_a;
    Pauli recovery;  // on b after the recovery gate
};

struct QubitTeleport {
    bool m1 = false;
    bool m2 = false;
    Gate gate = Gate::I;
    /// Bob's final frame relative to the ideally teleported state.
    Pauli output;
};

/// Frame propagation through one teleportation. `ideal_m1`/`ideal_m2` are
/// the outcomes a fault-free run would report; faults flip them.
QubitTeleport teleport_qubit(const TeleportFaults &faults, bool ideal_m1, bool ideal_m2);

struct ShotResult {
    /// Histogram of (m1, m2) outcomes over the block, indexed m1 * 2 + m2.
    std::array<uint32_t, 4> outcome_counts{};
    ErrorPattern x_frame;
    ErrorPattern z_frame;
    bool x_success = false;
    bool z_success = false;
    bool success() const {
        return x_success && z_success;
    }
};

/// One shot: teleports all 2d^2 data qubits through noisy EPR pairs with
/// depolarizing noise at gate_p after every protocol step, then decodes Bob's
/// X frame on vertices and Z frame on the dual lattice. The decoder is
/// invoked with p = gate_p. All randomness comes from `rng`.
ShotResult teleport_block(const ToricLayout &layout, double gate_p, const Decoder &decoder, RngStream &rng);

struct TeleportConfig {
    uint32_t d = 5;
    std::vector<double> rates;
    uint32_t shots = 1024;
    uint32_t repeats = 5;
    std::string decoder = "mwpm";
    std::string weights_path;
    uint64_t seed = 0;
};

struct TeleportBatch {
    double rate = 0.0;
    uint32_t batch_id = 0;
    uint32_t failures = 0;
    uint32_t baseline_failures = 0;
    uint32_t shots = 0;
    std::array<uint64_t, 4> outcome_counts{};
    double fidelity_optimized() const {
        return 1.0 - static_cast<double>(failures) / shots;
    }
    double fidelity_baseline() const {
        return 1.0 - static_cast<double>(baseline_failures) / shots;
    }
};

struct TeleportRun {
    TeleportConfig config;
    std::vector<TeleportBatch> batches;

    /// Mean failures per batch at rates[k].
    double mean_failures(size_t k) const;
    double mean_baseline_failures(size_t k) const;
};

/// For each rate, `repeats` batches of `shots` shots. Shot s of batch b at
/// rate index k uses stream stream_index(k, b * shots + s), so every decoder
/// sees the same noise for the same seed. The baseline (no correction) is
/// judged on the same frames. Throws InvalidArgument.
TeleportRun run_fidelity_experiment(const TeleportConfig &config);

/// Columns: rate, batch_id, failures, shots, fidelity_optimized,
/// fidelity_baseline, decoder, d, seed. Each rate ends with a row whose
/// batch_id is "mean".
void write_teleport_csv(std::ostream &out, const TeleportRun &run);

/// Rate where least-squares quadratic fits of optimized and baseline fidelity
/// intersect inside the sampled range, if they do.
std::optional<double> fidelity_crossing(const TeleportRun &run);

/// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace gq
