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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: gq_acceptance [--golden DIR] [--only NAME]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "gq/decoder.hpp"
#include "gq/error.hpp"
#include "gq/harness.hpp"
#include "gq/homology.hpp"
#include "gq/matching.hpp"
#include "gq/nn/gan_decoder.hpp"
#include "gq/nn/network.hpp"
#include "gq/nn/weights.hpp"
#include "gq/noise.hpp"
#include "gq/rng.hpp"
#include "gq/syndrome.hpp"
#include "gq/teleport.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<Verdict()> run;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Verdict syndrome_parity() {
    uint64_t patterns = 0, odd = 0;
    const std::array<double, 3> rates{0.01, 0.1, 0.3};
    for (uint32_t d : {3u, 5u}) {
        gq::ToricLayout layout(d);
        for (size_t k = 0; k < rates.size(); k++) {
            for (uint64_t t = 0; t < 100000; t++) {
                gq::RngStream rng(101, gq::stream_index(d * 8 + k, t));
                gq::ErrorPattern e = gq::sample_iid(layout, rates[k], rng);
                odd += gq::compute_syndrome(layout, e).popcount() % 2;
                odd += gq::compute_face_syndrome(layout, e).popcount() % 2;
                patterns++;
            }
        }
    }
    return {odd == 0, fmt("%llu patterns, %llu odd defect counts", (unsigned long long)patterns,
                          (unsigned long long)odd)};
}

// Zero-syndrome patterns of the d=3 code, enumerated with star masks built
// directly from the edge indexing h(r,c) = 3r + c, v(r,c) = 9 + 3r + c.
Verdict kernel_count() {
    const uint32_t d = 3;
    std::array<uint32_t, 9> star{};
    for (uint32_t r = 0; r < d; r++) {
        for (uint32_t c = 0; c < d; c++) {
            uint32_t m = 0;
            m |= 1u << (r * d + c);                            // h(r, c)
            m |= 1u << (r * d + (c + d - 1) % d);              // h(r, c-1)
            m |= 1u << (d * d + r * d + c);                    // v(r, c)
            m |= 1u << (d * d + ((r + d - 1) % d) * d + c);    // v(r-1, c)
            star[r * d + c] = m;
        }
    }
    uint64_t kernel = 0;
    for (uint32_t x = 0; x < (1u << 18); x++) {
        bool ok = true;
        for (uint32_t m : star) {
            if (__builtin_popcount(x & m) & 1) {
                ok = false;
                break;
            }
        }
        kernel += ok;
    }
    uint64_t table = gq::CosetTable::get(gq::ToricLayout(3)).kernel_size();
    return {kernel == 1024 && table == 1024,
            fmt("enumeration %llu, coset table %llu, expected 1024", (unsigned long long)kernel,
                (unsigned long long)table)};
}

int64_t torus_metric(uint32_t d, uint32_t a, uint32_t b) {
    int64_t dr = std::abs(int64_t(a / d) - int64_t(b / d));
    int64_t dc = std::abs(int64_t(a % d) - int64_t(b % d));
    return std::min<int64_t>(dr, d - dr) + std::min<int64_t>(dc, d - dc);
}

Verdict mwpm_exactness() {
    const uint32_t d = 5;
    gq::ToricLayout layout(d);
    uint64_t agree = 0, total = 0, invalid = 0;
    gq::RngStream rng(202, 0);
    for (int t = 0; t < 10000; t++) {
        uint32_t k = 2 * uint32_t(1 + rng() % 5);
        gq::Syndrome s = layout.empty_checks();
        while (s.popcount() < k) {
            s.set(rng() % layout.num_vertices());
        }
        auto defects = s.ones();
        std::vector<std::vector<int64_t>> cost(k, std::vector<int64_t>(k));
        for (size_t i = 0; i < k; i++) {
            for (size_t j = 0; j < k; j++) {
                cost[i][j] = torus_metric(d, uint32_t(defects[i]), uint32_t(defects[j]));
            }
        }
        gq::Matching m = gq::mwpm_match(layout, s);
        gq::Correction c = gq::pairing_to_correction(layout, m);
        invalid += gq::compute_syndrome(layout, c) != s;
        agree += int64_t(m.total_weight()) == gq::testing::brute_min_pairing(cost);
        total++;
    }
    return {agree == total && invalid == 0,
            fmt("%llu/%llu minimum weight, %llu invalid corrections", (unsigned long long)agree,
                (unsigned long long)total, (unsigned long long)invalid)};
}

Verdict oracle_agreement() {
    gq::ToricLayout layout(3);
    gq::MwpmDecoder dec(layout);
    bool ok = true;
    std::ostringstream os;
    const std::array<double, 3> rates{0.02, 0.05, 0.1};
    for (size_t k = 0; k < rates.size(); k++) {
        double p = rates[k];
        gq::SweepPoint pt = gq::sweep_point(layout, dec, p, 100000, 303, k);
        double exact = gq::mwpm_exact_success(layout, p);
        auto [lo, hi] = gq::wilson_interval(pt.trials - pt.failures, pt.trials, 3.0);
        bool inside = exact >= lo && exact <= hi;
        ok = ok && inside;
        os << fmt("p=%.2f mc %.5f exact %.5f [%.5f, %.5f]%s; ", p, pt.fidelity(), exact, lo, hi,
                  inside ? "" : " OUTSIDE");
    }
    size_t dominated = 0, checked = 0;
    for (int i = 1; i <= 50; i++) {
        double p = 0.01 * i;
        double opt = gq::optimal_success(layout, p);
        double mw = gq::mwpm_exact_success(layout, p);
        dominated += opt + 1e-12 >= mw;
        checked++;
    }
    ok = ok && dominated == checked;
    os << fmt("optimal >= mwpm at %zu/%zu rates in 0.01..0.50", dominated, checked);
    return {ok, os.str()};
}

Verdict mwpm_threshold() {
    gq::SweepConfig cfg;
    cfg.distances = {3, 5};
    cfg.rates = gq::parse_rate_list("0.06:0.16:0.01");
    cfg.trials = 100000;
    cfg.seed = 404;
    gq::SweepResult r = gq::sweep(cfg);
    try {
        gq::ThresholdEstimate est = gq::estimate_threshold(r, 3, 5);
        bool ok = est.p >= 0.08 && est.p <= 0.13;
        return {ok, fmt("crossing %.4f in cell [%.2f, %.2f], required [0.08, 0.13]", est.p, est.cell_low,
                        est.cell_high)};
    } catch (const gq::Error &ex) {
        return {false, ex.what()};
    }
}

Verdict teleport_exactness() {
    std::ostringstream os;
    bool ok = true;
    for (uint32_t d : {3u, 5u}) {
        gq::TeleportConfig cfg;
        cfg.d = d;
        cfg.rates = {0.0};
        cfg.shots = 4096;
        cfg.repeats = 1;
        cfg.seed = 505;
        auto run = gq::run_fidelity_experiment(cfg);
        double f = run.batches.at(0).fidelity_optimized();
        ok = ok && f == 1.0;
        os << fmt("d=%u fidelity %.6f; ", d, f);
    }

    // Recovery map: every reported outcome with every injected input frame
    // yields Bob's frame equal to the injected one.
    int exact = 0;
    for (int m = 0; m < 4; m++) {
        for (int k = 0; k < 4; k++) {
            gq::TeleportFaults faults;
            faults.input = gq::Pauli{(k & 1) != 0, (k & 2) != 0};
            gq::QubitTeleport t0 = gq::teleport_qubit(faults, false, false);
            bool i1 = ((m >> 1) & 1) != int(t0.m1), i2 = (m & 1) != int(t0.m2);
            gq::QubitTeleport t = gq::teleport_qubit(faults, i1, i2);
            bool good = t.gate == gq::recovery_gate((m >> 1) & 1, m & 1) && t.output == faults.input;
            exact += good;
        }
    }
    ok = ok && exact == 16;
    os << fmt("recovery map %d/16; ", exact);

    gq::ToricLayout layout(3);
    gq::MwpmDecoder dec(layout);
    std::array<uint64_t, 4> counts{};
    uint64_t n = 0;
    for (uint64_t s = 0; s < 100000; s++) {
        gq::RngStream rng(506, s);
        gq::ShotResult shot = gq::teleport_block(layout, 0.01, dec, rng);
        for (int k = 0; k < 4; k++) {
            counts[k] += shot.outcome_counts[k];
            n += shot.outcome_counts[k];
        }
    }
    double sigma = std::sqrt(0.25 * 0.75 / double(n));
    os << "outcome frequencies";
    for (int k = 0; k < 4; k++) {
        double f = double(counts[k]) / double(n);
        ok = ok && std::abs(f - 0.25) <= 3 * sigma;
        os << fmt(" %.5f", f);
    }
    os << fmt(" (3 sigma %.5f over %llu outcomes)", 3 * sigma, (unsigned long long)n);
    return {ok, os.str()};
}

Verdict teleport_monotonicity() {
    gq::TeleportConfig cfg;
    cfg.d = 5;
    cfg.rates = gq::parse_rate_list("0.005:0.08:0.005");
    cfg.shots = 10000;
    cfg.repeats = 1;
    cfg.seed = 606;
    auto run = gq::run_fidelity_experiment(cfg);
    std::vector<double> mean;
    bool benefit = true;
    for (size_t k = 0; k < cfg.rates.size(); k++) {
        mean.push_back(run.mean_failures(k));
        benefit = benefit && run.mean_failures(k) <= run.mean_baseline_failures(k);
    }
    double rho = gq::spearman(cfg.rates, mean);
    return {rho > 0 && benefit,
            fmt("spearman %.4f over %zu rates, protected >= unprotected at every rate: %s (failures %.0f .. %.0f)",
                rho, mean.size(), benefit ? "yes" : "no", mean.front(), mean.back())};
}

Verdict golden_parity(const std::filesystem::path &dir) {
    std::ostringstream os;
    bool ok = true;
    for (std::string net : {"generator", "discriminator"}) {
        auto wpath = dir / (net + "_weights.gqwt");
        auto gpath = dir / (net + "_golden.gqwt");
        if (!std::filesystem::exists(wpath) || !std::filesystem::exists(gpath)) {
            return {false, "missing " + wpath.string() + " or " + gpath.string()};
        }
        auto bytes = gq::nn::read_file_bytes(wpath);
        auto weights = gq::nn::decode_weights(bytes);
        bool same = gq::nn::encode_weights(weights) == bytes;
        auto gbytes = gq::nn::read_file_bytes(gpath);
        auto golden = gq::nn::decode_weights(gbytes);
        same = same && gq::nn::encode_weights(golden) == gbytes;
        auto report = gq::nn::verify_golden(weights, golden);
        ok = ok && same && report.passed();
        os << fmt("%s: %zu vectors max rel err %.2e, round trip %s; ", net.c_str(), report.vectors,
                  report.max_relative_error, same ? "byte-identical" : "DIFFERS");
    }
    return {ok, os.str()};
}

Verdict zero_weight_gan() {
    gq::ToricLayout layout(3);
    auto weights = std::make_shared<const gq::nn::ModelWeights>(
        gq::nn::make_weights(gq::nn::Network::Generator, 3, gq::nn::Init::Zero));
    gq::nn::GanDecoder gan(layout, weights);
    gq::MwpmDecoder mwpm(layout);
    const double p = 0.05;
    const uint64_t trials = 2000;
    gq::SweepPoint a = gq::sweep_point(layout, gan, p, trials, 707, 0);
    gq::SweepPoint b = gq::sweep_point(layout, mwpm, p, trials, 707, 0);
    // Same streams as the sweeps above; every correction must coincide.
    uint64_t same = 0;
    for (uint64_t t = 0; t < trials; t++) {
        gq::RngStream rng(707, gq::stream_index(0, t));
        gq::Syndrome s = gq::compute_syndrome(layout, gq::sample_iid(layout, p, rng));
        same += gan.decode(s, p) == mwpm.decode(s, p);
    }
    return {a.failures == b.failures && same == trials,
            fmt("p=%.2f: gan %llu failures, mwpm %llu failures, %llu/%llu identical corrections (%zu forward passes)",
                p, (unsigned long long)a.failures, (unsigned long long)b.failures, (unsigned long long)same,
                (unsigned long long)trials, gan.forward_passes())};
}

}  // namespace

int main(int argc, char **argv) {
    std::filesystem::path golden = "golden";
    std::string only;
    for (int i = 1; i < argc; i++) {
        if (!std::strcmp(argv[i], "--golden") && i + 1 < argc) {
            golden = argv[++i];
        } else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
            only = argv[++i];
        } else {
            std::fprintf(stderr, "usage: %s [--golden DIR] [--only NAME]\n", argv[0]);
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {"syndrome-parity", 10, syndrome_parity},
        {"kernel-count", 30, kernel_count},
        {"mwpm-exactness", 120, mwpm_exactness},
        {"oracle-agreement", 300, oracle_agreement},
        {"mwpm-threshold", 900, mwpm_threshold},
        {"teleport-exactness", 120, teleport_exactness},
        {"teleport-monotonicity", 600, teleport_monotonicity},
        {"weight-golden-parity", 600, [&] { return golden_parity(golden); }},
        {"zero-weight-gan-equals-mwpm", 600, zero_weight_gan},
    };

    int failed = 0;
    for (const auto &c : criteria) {
        if (!only.empty() && c.name != only) {
            continue;
        }
        auto start = Clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception &ex) {
            v = {false, std::string("exception: ") + ex.what()};
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        bool in_time = secs <= c.limit_seconds;
        bool pass = v.pass && in_time;
        failed += !pass;
        std::printf("%s %-28s %7.1fs (limit %4.0fs%s)  %s\n", pass ? "PASS" : "FAIL", c.name.c_str(), secs,
                    c.limit_seconds, in_time ? "" : ", EXCEEDED", v.detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
