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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gq/dataset.hpp"
#include "gq/error.hpp"
#include "gq/harness.hpp"
#include "gq/nn/network.hpp"
#include "gq/nn/weights.hpp"
#include "gq/teleport.hpp"

namespace {

// Writes to `path`, or stdout for "-".
template <typename Fn>
void with_output(const std::string &path, Fn &&fn) {
    if (path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw gq::Error(gq::ErrorCode::InvalidArgument, "cannot open " + path + " for writing");
    }
    fn(out);
}

int run_sweep(const std::string &ds, const std::string &ps, uint64_t trials, const std::string &decoder,
              const std::string &weights, uint64_t seed, const std::string &out) {
    gq::SweepConfig cfg;
    cfg.distances = gq::parse_distance_list(ds);
    cfg.rates = gq::parse_rate_list(ps);
    cfg.trials = trials;
    cfg.decoder = decoder;
    cfg.weights_path = weights;
    cfg.seed = seed;
    auto result = gq::sweep(cfg);
    with_output(out, [&](std::ostream &os) { gq::write_sweep_csv(os, result); });
    return 0;
}

int run_threshold(const std::string &in, const std::vector<uint32_t> &ds) {
    if (ds.size() != 2) {
        throw gq::Error(gq::ErrorCode::InvalidArgument, "--d takes exactly two distances");
    }
    std::ifstream f(in);
    if (!f) {
        throw gq::Error(gq::ErrorCode::InvalidArgument, "cannot open " + in);
    }
    auto result = gq::read_sweep_csv(f);
    auto est = gq::estimate_threshold(result, ds[0], ds[1]);
    std::cout << "threshold " << est.p << " cell [" << est.cell_low << ", " << est.cell_high << "] midpoint "
              << est.midpoint() << "\n";
    return 0;
}

int run_dataset(uint32_t d, double p, uint64_t count, const std::string &target, uint64_t seed,
                const std::string &out) {
    gq::TargetSource src;
    if (target == "ml") {
        src = gq::TargetSource::MlOracle;
    } else if (target == "mwpm") {
        src = gq::TargetSource::Mwpm;
    } else {
        throw gq::Error(gq::ErrorCode::InvalidArgument, "--target must be ml or mwpm");
    }
    auto ds = gq::generate_dataset(d, p, count, src, seed);
    gq::write_dataset(out, ds);
    std::cerr << "wrote " << ds.records.size() << " records to " << out << "\n";
    return 0;
}

int run_teleport(const gq::TeleportConfig &cfg, const std::string &rates, const std::string &out) {
    gq::TeleportConfig c = cfg;
    c.rates = gq::parse_rate_list(rates);
    auto run = gq::run_fidelity_experiment(c);
    with_output(out, [&](std::ostream &os) { gq::write_teleport_csv(os, run); });
    if (auto x = gq::fidelity_crossing(run)) {
        std::cerr << "fitted fidelity curves cross at rate " << *x << "\n";
    } else {
        std::cerr << "fitted fidelity curves do not cross in the sampled range\n";
    }
    return 0;
}

int run_verify(const std::string &weights_path, const std::string &golden_path) {
    auto bytes = gq::nn::read_file_bytes(weights_path);
    auto weights = gq::nn::decode_weights(bytes);
    bool identical = gq::nn::encode_weights(weights) == bytes;
    std::cout << "round trip: " << (identical ? "byte-identical" : "DIFFERS") << " (" << bytes.size()
              << " bytes)\n";
    bool ok = identical;
    if (!golden_path.empty()) {
        auto golden = gq::nn::read_weights(golden_path);
        auto report = gq::nn::verify_golden(weights, golden);
        for (const auto &c : report.checks) {
            std::cout << c.name << " rel_err " << c.relative_error << "\n";
        }
        std::cout << report.vectors << " vectors, max rel_err " << report.max_relative_error << " (tol "
                  << report.tolerance << "): " << (report.passed() ? "PASS" : "FAIL") << "\n";
        ok = ok && report.passed();
    } else {
        gq::nn::validate(weights, gq::nn::network_of(weights));
        std::cout << "schema: ok\n";
    }
    return ok ? 0 : 1;
}

int run_init(const std::string &network, uint32_t d, bool zero, uint64_t seed, const std::string &out) {
    gq::nn::Network net;
    if (network == "generator") {
        net = gq::nn::Network::Generator;
    } else if (network == "discriminator") {
        net = gq::nn::Network::Discriminator;
    } else {
        throw gq::Error(gq::ErrorCode::InvalidArgument, "--network must be generator or discriminator");
    }
    auto w = gq::nn::make_weights(net, d, zero ? gq::nn::Init::Zero : gq::nn::Init::Random, seed);
    gq::nn::write_weights(out, w);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"gqdec: toric-code decoding lab"};
    app.require_subcommand(1);

    std::string ds = "3,5", ps = "0.01:0.20:0.01", decoder = "mwpm", weights, out = "-";
    uint64_t trials = 100000, seed = 0;
    auto *sweep = app.add_subcommand("sweep", "Monte Carlo logical fidelity under i.i.d. bit flips");
    sweep->add_option("--d", ds, "Comma-separated code distances")->capture_default_str();
    sweep->add_option("--p", ps, "Rates as a:b:step or a comma list")->capture_default_str();
    sweep->add_option("--trials", trials, "Trials per point")->capture_default_str();
    sweep->add_option("--decoder", decoder, "mwpm, gan or none")->capture_default_str();
    sweep->add_option("--weights", weights, "Generator weight file for --decoder gan");
    sweep->add_option("--seed", seed, "Run seed")->capture_default_str();
    sweep->add_option("--out", out, "CSV output path, - for stdout")->capture_default_str();

    std::string in;
    std::vector<uint32_t> pair;
    auto *threshold = app.add_subcommand("threshold", "Crossing point of two fidelity curves");
    threshold->add_option("--in", in, "Sweep CSV")->required();
    threshold->add_option("--d", pair, "Two distances")->required()->expected(2);

    uint32_t d = 3;
    double p = 0.05;
    uint64_t count = 50000;
    std::string target = "ml", ds_out;
    auto *dataset = app.add_subcommand("dataset", "Labelled training records in GQDS format");
    dataset->add_option("--d", d, "Code distance")->capture_default_str();
    dataset->add_option("--p", p, "Bit-flip rate")->capture_default_str();
    dataset->add_option("--count", count, "Number of records")->capture_default_str();
    dataset->add_option("--target", target, "ml (d=3 only) or mwpm")->capture_default_str();
    dataset->add_option("--seed", seed, "Run seed")->capture_default_str();
    dataset->add_option("--out", ds_out, "Output file")->required();

    gq::TeleportConfig tcfg;
    std::string rates = "0.005:0.08:0.005";
    auto *teleport = app.add_subcommand("teleport", "Fidelity of teleporting a protected block");
    teleport->add_option("--d", tcfg.d, "Code distance")->capture_default_str();
    teleport->add_option("--rates", rates, "Gate error rates as a:b:step or a comma list")->capture_default_str();
    teleport->add_option("--shots", tcfg.shots, "Shots per batch")->capture_default_str();
    teleport->add_option("--repeats", tcfg.repeats, "Batches per rate")->capture_default_str();
    teleport->add_option("--decoder", tcfg.decoder, "mwpm, gan or none")->capture_default_str();
    teleport->add_option("--weights", tcfg.weights_path, "Generator weight file for --decoder gan");
    teleport->add_option("--seed", tcfg.seed, "Run seed")->capture_default_str();
    teleport->add_option("--out", out, "CSV output path, - for stdout")->capture_default_str();

    std::string golden;
    auto *verify = app.add_subcommand("verify-weights", "Check a weight file against golden vectors");
    verify->add_option("--weights", weights, "Weight file")->required();
    verify->add_option("--golden", golden, "Golden-vector file");

    std::string network = "generator", init_out;
    bool zero = false, random = false;
    auto *init = app.add_subcommand("init-weights", "Write schema-valid zero or random weights");
    init->add_option("--network", network, "generator or discriminator")->capture_default_str();
    init->add_option("--d", d, "Code distance recorded in the metadata")->capture_default_str();
    auto *zero_flag = init->add_flag("--zero", zero, "All conv and fc values 0");
    init->add_flag("--random", random, "Random values from --seed")->excludes(zero_flag);
    init->add_option("--seed", seed, "Seed for --random")->capture_default_str();
    init->add_option("--out", init_out, "Output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep) {
            return run_sweep(ds, ps, trials, decoder, weights, seed, out);
        }
        if (*threshold) {
            return run_threshold(in, pair);
        }
        if (*dataset) {
            return run_dataset(d, p, count, target, seed, ds_out);
        }
        if (*teleport) {
            return run_teleport(tcfg, rates, out);
        }
        if (*verify) {
            return run_verify(weights, golden);
        }
        if (*init) {
            return run_init(network, d, !random, seed, init_out);
        }
    } catch (const gq::Error &ex) {
        std::cerr << "error [" << gq::to_string(ex.code()) << "]: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
