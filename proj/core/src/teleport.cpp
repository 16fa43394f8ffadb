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

#include "gq/teleport.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "gq/error.hpp"
#include "gq/homology.hpp"
#include "gq/parallel.hpp"
#include "gq/syndrome.hpp"

namespace gq {

std::string_view to_string(Gate g) {
    switch (g) {
        case Gate::I:
            return "I";
        case Gate::X:
            return "X";
        case Gate::Z:
            return "Z";
        case Gate::Y:
            return "Y";
    }
    return "?";
}

Gate recovery_gate(bool m1, bool m2) {
    return static_cast<Gate>((m1 ? 2 : 0) | (m2 ? 1 : 0));
}

Pauli gate_pauli(Gate g) {
    return Pauli{g == Gate::X || g == Gate::Y, g == Gate::Z || g == Gate::Y};
}

QubitTeleport teleport_qubit(const TeleportFaults &f, bool ideal_m1, bool ideal_m2) {
    TeleportFrames fr;
    fr.c = f.input;
    fr.a = f.epr_a;
    fr.b = f.epr_b;

    // CNOT c -> a: X spreads to the target, Z back to the control.
    fr.a.x ^= fr.c.x;
    fr.c.z ^= fr.a.z;
    fr.c ^= f.cnot_c;
    fr.a ^= f.cnot_a;

    // H on c exchanges X and Z.
    std::swap(fr.c.x, fr.c.z);
    fr.c ^= f.meas_c;
    fr.a ^= f.meas_a;

    // Z-basis measurements report flipped outcomes under an X frame.
    QubitTeleport out;
    out.m1 = ideal_m1 != fr.c.x;
    out.m2 = ideal_m2 != fr.a.x;
    out.gate = recovery_gate(out.m1, out.m2);

    // Bob applies the gate for the reported outcomes; relative to the ideal
    // gate the difference is X^(flip m2) Z^(flip m1).
    fr.b.x ^= fr.a.x;
    fr.b.z ^= fr.c.x;
    fr.b ^= f.recovery;
    out.output = fr.b;
    return out;
}

ShotResult teleport_block(const ToricLayout &layout, double gate_p, const Decoder &decoder, RngStream &rng) {
    const size_t n = layout.num_edges();
    ShotResult shot;
    shot.x_frame = layout.empty_edges();
    shot.z_frame = layout.empty_edges();
    for (size_t q = 0; q < n; q++) {
        TeleportFaults f;
        f.epr_a = sample_depolarizing_pauli(gate_p, rng);
        f.epr_b = sample_depolarizing_pauli(gate_p, rng);
        f.cnot_c = sample_depolarizing_pauli(gate_p, rng);
        f.cnot_a = sample_depolarizing_pauli(gate_p, rng);
        f.meas_c = sample_depolarizing_pauli(gate_p, rng);
        f.meas_a = sample_depolarizing_pauli(gate_p, rng);
        f.recovery = sample_depolarizing_pauli(gate_p, rng);
        uint64_t bits = rng.next_u64();
        QubitTeleport t = teleport_qubit(f, (bits & 1) != 0, (bits & 2) != 0);
        shot.outcome_counts[(t.m1 ? 2 : 0) | (t.m2 ? 1 : 0)]++;
        shot.x_frame.set(q, t.output.x);
        shot.z_frame.set(q, t.output.z);
    }

    Syndrome sx = compute_syndrome(layout, shot.x_frame);
    shot.x_success = judge(layout, shot.x_frame, decoder.decode(sx, gate_p)).success;

    EdgeBits z_dual = layout.to_dual(shot.z_frame);
    Syndrome sz = compute_syndrome(layout, z_dual);
    shot.z_success = judge(layout, z_dual, decoder.decode(sz, gate_p)).success;
    return shot;
}

double TeleportRun::mean_failures(size_t k) const {
    double sum = 0.0;
    size_t n = 0;
    for (const auto &b : batches) {
        if (b.rate == config.rates.at(k)) {
            sum += b.failures;
            n++;
        }
    }
    return n ? sum / n : 0.0;
}

double TeleportRun::mean_baseline_failures(size_t k) const {
    double sum = 0.0;
    size_t n = 0;
    for (const auto &b : batches) {
        if (b.rate == config.rates.at(k)) {
            sum += b.baseline_failures;
            n++;
        }
    }
    return n ? sum / n : 0.0;
}

TeleportRun run_fidelity_experiment(const TeleportConfig &config) {
    if (config.shots == 0 || config.repeats == 0) {
        throw Error(ErrorCode::InvalidArgument, "shots and repeats must be positive");
    }
    for (double r : config.rates) {
        NoiseConfig{NoiseModel::Depolarizing, 0.0, r, config.seed}.validate();
    }
    ToricLayout layout = build_layout(config.d);
    auto decoder = make_decoder(config.decoder, layout, config.weights_path);
    NoneDecoder baseline(layout);

    TeleportRun run;
    run.config = config;
    for (size_t k = 0; k < config.rates.size(); k++) {
        const double rate = config.rates[k];
        for (uint32_t b = 0; b < config.repeats; b++) {
            const size_t n = config.shots;
            std::vector<uint8_t> fail(n, 0);
            std::vector<uint8_t> base_fail(n, 0);
            std::vector<std::array<uint32_t, 4>> outcomes(n);
            parallel_for(n, [&](size_t begin, size_t end) {
                for (size_t s = begin; s < end; s++) {
                    RngStream rng(config.seed, stream_index(k, uint64_t{b} * config.shots + s));
                    ShotResult shot = teleport_block(layout, rate, *decoder, rng);
                    fail[s] = !shot.success();
                    // The uncorrected verdict only depends on the frames.
                    bool bx = judge(layout, shot.x_frame, layout.empty_edges()).success;
                    bool bz = judge(layout, layout.to_dual(shot.z_frame), layout.empty_edges()).success;
                    base_fail[s] = !(bx && bz);
                    outcomes[s] = shot.outcome_counts;
                }
            });
            TeleportBatch batch;
            batch.rate = rate;
            batch.batch_id = b;
            batch.shots = config.shots;
            for (size_t s = 0; s < n; s++) {
                batch.failures += fail[s];
                batch.baseline_failures += base_fail[s];
                for (size_t o = 0; o < 4; o++) {
                    batch.outcome_counts[o] += outcomes[s][o];
                }
            }
            run.batches.push_back(batch);
        }
    }
    return run;
}

void write_teleport_csv(std::ostream &out, const TeleportRun &run) {
    const auto &cfg = run.config;
    out << "rate,batch_id,failures,shots,fidelity_optimized,fidelity_baseline,decoder,d,seed\n";
    auto prev = out.precision(10);
    for (size_t k = 0; k < cfg.rates.size(); k++) {
        for (const auto &b : run.batches) {
            if (b.rate != cfg.rates[k]) {
                continue;
            }
            out << b.rate << ',' << b.batch_id << ',' << b.failures << ',' << b.shots << ','
                << b.fidelity_optimized() << ',' << b.fidelity_baseline() << ',' << cfg.decoder << ',' << cfg.d
                << ',' << cfg.seed << '\n';
        }
        double mf = run.mean_failures(k);
        double mb = run.mean_baseline_failures(k);
        out << cfg.rates[k] << ",mean," << mf << ',' << cfg.shots << ',' << 1.0 - mf / cfg.shots << ','
            << 1.0 - mb / cfg.shots << ',' << cfg.decoder << ',' << cfg.d << ',' << cfg.seed << '\n';
    }
    out.precision(prev);
}

namespace {

// Least-squares y ~ c0 + c1 x + c2 x^2 via the 3x3 normal equations.
std::optional<std::array<double, 3>> fit_quadratic(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() < 3) {
        return std::nullopt;
    }
    double m[3][4] = {};
    for (size_t i = 0; i < x.size(); i++) {
        double pw[5] = {1, x[i], x[i] * x[i], x[i] * x[i] * x[i], x[i] * x[i] * x[i] * x[i]};
        for (int r = 0; r < 3; r++) {
            for (int c = 0; c < 3; c++) {
                m[r][c] += pw[r + c];
            }
            m[r][3] += pw[r] * y[i];
        }
    }
    for (int col = 0; col < 3; col++) {
        int piv = col;
        for (int r = col + 1; r < 3; r++) {
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) {
                piv = r;
            }
        }
        if (std::abs(m[piv][col]) < 1e-300) {
            return std::nullopt;
        }
        std::swap(m[col], m[piv]);
        for (int r = 0; r < 3; r++) {
            if (r == col) {
                continue;
            }
            double f = m[r][col] / m[col][col];
            for (int c = col; c < 4; c++) {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    return std::array<double, 3>{m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

std::vector<double> average_ranks(const std::vector<double> &v) {
    std::vector<size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> rank(v.size());
    for (size_t i = 0; i < idx.size();) {
        size_t j = i;
        while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) {
            j++;
        }
        double r = (static_cast<double>(i) + j) / 2.0 + 1.0;
        for (size_t k = i; k <= j; k++) {
            rank[idx[k]] = r;
        }
        i = j + 1;
    }
    return rank;
}

}  // namespace

std::optional<double> fidelity_crossing(const TeleportRun &run) {
    const auto &rates = run.config.rates;
    std::vector<double> opt, base;
    for (size_t k = 0; k < rates.size(); k++) {
        opt.push_back(1.0 - run.mean_failures(k) / run.config.shots);
        base.push_back(1.0 - run.mean_baseline_failures(k) / run.config.shots);
    }
    auto fo = fit_quadratic(rates, opt);
    auto fb = fit_quadratic(rates, base);
    if (!fo || !fb) {
        return std::nullopt;
    }
    double a = (*fo)[2] - (*fb)[2];
    double b = (*fo)[1] - (*fb)[1];
    double c = (*fo)[0] - (*fb)[0];
    const double lo = *std::min_element(rates.begin(), rates.end());
    const double hi = *std::max_element(rates.begin(), rates.end());
    std::vector<double> roots;
    if (std::abs(a) < 1e-12) {
        if (std::abs(b) > 1e-12) {
            roots.push_back(-c / b);
        }
    } else {
        double disc = b * b - 4 * a * c;
        if (disc >= 0) {
            double sq = std::sqrt(disc);
            roots.push_back((-b - sq) / (2 * a));
            roots.push_back((-b + sq) / (2 * a));
        }
    }
    std::optional<double> best;
    for (double r : roots) {
        if (r >= lo && r <= hi && (!best || r < *best)) {
            best = r;
        }
    }
    return best;
}

double spearman(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "spearman needs two equal-length series of at least 2 values");
    }
    auto rx = average_ranks(x);
    auto ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (size_t i = 0; i < rx.size(); i++) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0 || syy == 0) {
        return 0.0;
    }
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace gq
