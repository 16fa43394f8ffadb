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

#include "gq/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "gq/error.hpp"
#include "gq/homology.hpp"
#include "gq/noise.hpp"
#include "gq/parallel.hpp"
#include "gq/rng.hpp"
#include "gq/syndrome.hpp"

namespace gq {

std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials, double z) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

SweepPoint sweep_point(const ToricLayout &layout, const Decoder &decoder, double p, uint64_t trials, uint64_t seed,
                       uint64_t point_index) {
    SweepPoint pt;
    pt.d = layout.distance();
    pt.p = p;
    pt.trials = trials;
    std::vector<uint8_t> fail(trials, 0);
    parallel_for(trials, [&](size_t begin, size_t end) {
        for (size_t t = begin; t < end; t++) {
            RngStream rng(seed, stream_index(point_index, t));
            ErrorPattern e = sample_iid(layout, p, rng);
            Syndrome s = compute_syndrome(layout, e);
            fail[t] = !judge(layout, e, decoder.decode(s, p)).success;
        }
    });
    for (auto f : fail) {
        pt.failures += f;
    }
    return pt;
}

SweepResult sweep(const SweepConfig &config) {
    if (config.trials == 0) {
        throw Error(ErrorCode::InvalidArgument, "trials must be positive");
    }
    for (double p : config.rates) {
        NoiseConfig{NoiseModel::IndependentXZ, p, 0.0, config.seed}.validate();
    }
    SweepResult result;
    result.decoder = config.decoder;
    result.seed = config.seed;
    for (uint32_t d : config.distances) {
        ToricLayout layout = build_layout(d);
        auto decoder = make_decoder(config.decoder, layout, config.weights_path);
        for (size_t k = 0; k < config.rates.size(); k++) {
            result.points.push_back(sweep_point(layout, *decoder, config.rates[k], config.trials, config.seed, k));
        }
    }
    return result;
}

void write_sweep_csv(std::ostream &out, const SweepResult &result) {
    out << "d,p,trials,failures,fidelity,wilson_low,wilson_high,decoder,seed\n";
    auto prev = out.precision(10);
    for (const auto &pt : result.points) {
        auto [lo, hi] = wilson_interval(pt.trials - pt.failures, pt.trials);
        out << pt.d << ',' << pt.p << ',' << pt.trials << ',' << pt.failures << ',' << pt.fidelity() << ',' << lo
            << ',' << hi << ',' << result.decoder << ',' << result.seed << '\n';
    }
    out.precision(prev);
}

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

double parse_double(const std::string &s) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw Error(ErrorCode::FormatError, "not a number: '" + s + "'");
    }
    if (used != s.size()) {
        throw Error(ErrorCode::FormatError, "not a number: '" + s + "'");
    }
    return v;
}

uint64_t parse_u64(const std::string &s) {
    size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception &) {
        throw Error(ErrorCode::FormatError, "not an integer: '" + s + "'");
    }
    if (used != s.size()) {
        throw Error(ErrorCode::FormatError, "not an integer: '" + s + "'");
    }
    return v;
}

}  // namespace

SweepResult read_sweep_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorCode::FormatError, "empty sweep file");
    }
    auto header = split(line, ',');
    std::map<std::string, size_t> col;
    for (size_t k = 0; k < header.size(); k++) {
        col[header[k]] = k;
    }
    for (const char *need : {"d", "p", "trials", "failures"}) {
        if (!col.count(need)) {
            throw Error(ErrorCode::FormatError, std::string("sweep file lacks column '") + need + "'");
        }
    }
    SweepResult result;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) {
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != header.size()) {
            throw Error(ErrorCode::FormatError, "line " + std::to_string(lineno) + " has the wrong field count");
        }
        SweepPoint pt;
        pt.d = static_cast<uint32_t>(parse_u64(f[col["d"]]));
        pt.p = parse_double(f[col["p"]]);
        pt.trials = parse_u64(f[col["trials"]]);
        pt.failures = parse_u64(f[col["failures"]]);
        if (pt.failures > pt.trials) {
            throw Error(ErrorCode::FormatError, "line " + std::to_string(lineno) + ": failures exceed trials");
        }
        if (col.count("decoder")) {
            result.decoder = f[col["decoder"]];
        }
        if (col.count("seed")) {
            result.seed = parse_u64(f[col["seed"]]);
        }
        result.points.push_back(pt);
    }
    return result;
}

ThresholdEstimate estimate_threshold(const SweepResult &result, uint32_t d_low, uint32_t d_high) {
    if (d_low == d_high) {
        throw Error(ErrorCode::InvalidArgument, "threshold needs two different distances");
    }
    std::map<double, double> lo, hi;
    for (const auto &pt : result.points) {
        if (pt.d == d_low) {
            lo[pt.p] = pt.fidelity();
        } else if (pt.d == d_high) {
            hi[pt.p] = pt.fidelity();
        }
    }
    std::vector<std::pair<double, double>> diff;  // (p, f_high - f_low)
    for (const auto &[p, f] : lo) {
        auto it = hi.find(p);
        if (it != hi.end()) {
            diff.emplace_back(p, it->second - f);
        }
    }
    if (diff.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "the two distances share fewer than two rates");
    }

    // Walk the nonzero differences; a zero between two opposite signs is an
    // exact crossing on the grid.
    std::optional<size_t> prev;
    for (size_t k = 0; k < diff.size(); k++) {
        if (diff[k].second == 0.0) {
            continue;
        }
        if (prev && (diff[*prev].second > 0) != (diff[k].second > 0)) {
            ThresholdEstimate est;
            if (*prev + 1 < k) {
                size_t z = *prev + 1;
                est.p = diff[z].first;
                est.cell_low = diff[z - 1].first;
                est.cell_high = diff[z + 1].first;
                return est;
            }
            auto [p0, y0] = diff[*prev];
            auto [p1, y1] = diff[k];
            est.p = p0 + (p1 - p0) * y0 / (y0 - y1);
            est.cell_low = p0;
            est.cell_high = p1;
            return est;
        }
        prev = k;
    }
    throw Error(ErrorCode::NoCrossing,
                "fidelity curves of d=" + std::to_string(d_low) + " and d=" + std::to_string(d_high) +
                    " do not cross on the grid");
}

std::vector<double> parse_rate_list(const std::string &text) {
    std::vector<double> out;
    auto parts = split(text, ':');
    if (parts.size() == 3) {
        double a = parse_double(parts[0]);
        double b = parse_double(parts[1]);
        double step = parse_double(parts[2]);
        if (step <= 0 || b < a) {
            throw Error(ErrorCode::InvalidArgument, "bad range '" + text + "'");
        }
        // Grid points a + k*step, computed by multiplication to avoid drift.
        auto n = static_cast<int64_t>(std::floor((b - a) / step + 1e-9));
        for (int64_t k = 0; k <= n; k++) {
            double v = a + static_cast<double>(k) * step;
            out.push_back(std::round(v * 1e12) / 1e12);
        }
        return out;
    }
    if (parts.size() != 1) {
        throw Error(ErrorCode::InvalidArgument, "bad range '" + text + "'");
    }
    for (const auto &s : split(text, ',')) {
        out.push_back(parse_double(s));
    }
    if (out.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty rate list");
    }
    return out;
}

std::vector<uint32_t> parse_distance_list(const std::string &text) {
    std::vector<uint32_t> out;
    for (const auto &s : split(text, ',')) {
        out.push_back(static_cast<uint32_t>(parse_u64(s)));
    }
    if (out.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty distance list");
    }
    return out;
}

}  // namespace gq
