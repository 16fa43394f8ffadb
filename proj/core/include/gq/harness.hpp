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

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gq/decoder.hpp"
#include "gq/lattice.hpp"

namespace gq {

struct SweepPoint {
    uint32_t d = 0;
    double p = 0.0;
    uint64_t trials = 0;
    uint64_t failures = 0;
    double fidelity() const {
        return trials ? 1.0 - static_cast<double>(failures) / trials : 0.0;
    }
};

struct SweepResult {
    std::string decoder;
    uint64_t seed = 0;
    std::vector<SweepPoint> points;
};

struct SweepConfig {
    std::vector<uint32_t> distances;
    std::vector<double> rates;
    uint64_t trials = 100000;
    std::string decoder = "mwpm";
    std::string weights_path;
    uint64_t seed = 0;
};

/// Wilson score interval for k successes in n trials at z standard scores.
std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials, double z = 1.96);

/// Code-capacity Monte Carlo with i.i.d. bit flips: sample, syndrome, decode,
/// judge. Trial t at rate index k uses stream stream_index(k, t), so the
/// result depends only on the config and decoders share noise samples.
/// Throws InvalidArgument, InvalidDistance.
SweepResult sweep(const SweepConfig &config);

/// The Monte Carlo loop for one (layout, p) point.
SweepPoint sweep_point(const ToricLayout &layout, const Decoder &decoder, double p, uint64_t trials, uint64_t seed,
                       uint64_t point_index);

/// Columns: d, p, trials, failures, fidelity, wilson_low, wilson_high,
/// decoder, seed. Interval is the 95% Wilson interval of the fidelity.
void write_sweep_csv(std::ostream &out, const SweepResult &result);
/// Throws FormatError.
SweepResult read_sweep_csv(std::istream &in);

struct ThresholdEstimate {
    /// Crossing of the linearly interpolated fidelity curves.
    double p = 0.0;
    /// Grid cell bracketing the crossing and its midpoint.
    double cell_low = 0.0;
    double cell_high = 0.0;
    double midpoint() const {
        return 0.5 * (cell_low + cell_high);
    }
};

/// First sign change of fidelity(d_high) - fidelity(d_low) on the shared p
/// grid, ignoring points where the curves coincide. Throws NoCrossing,
/// InvalidArgument.
ThresholdEstimate estimate_threshold(const SweepResult &result, uint32_t d_low, uint32_t d_high);

/// Parses "a:b:step" into an inclusive grid, or a comma-separated list.
std::vector<double> parse_rate_list(const std::string &text);
std::vector<uint32_t> parse_distance_list(const std::string &text);

}  // namespace gq
