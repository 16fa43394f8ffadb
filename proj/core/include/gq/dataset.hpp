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
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "gq/lattice.hpp"

namespace gq {

enum class TargetSource : uint8_t { MlOracle = 0, Mwpm = 1 };

std::string_view to_string(TargetSource s);

struct DatasetRecord {
    ErrorPattern error;
    Syndrome syndrome;
    /// A correction for `syndrome` in the same homology class as `error`.
    Correction target;
    TargetSource source = TargetSource::Mwpm;
};

struct Dataset {
    uint32_t d = 0;
    double p = 0.0;
    std::vector<DatasetRecord> records;
};

inline constexpr uint32_t kDatasetFormatVersion = 1;

/// Samples i.i.d. errors at rate p and labels each with a target correction:
/// the MWPM correction, moved by logical cycles into the maximum-likelihood
/// class when source is MlOracle. Samples whose target would not be a
/// trivial-loop correction are discarded and redrawn, so every record
/// satisfies judge(error, target).success. Sample k uses stream k.
/// Throws DistanceTooLarge (MlOracle with d != 3), InvalidArgument.
Dataset generate_dataset(uint32_t d, double p, uint64_t count, TargetSource source, uint64_t seed);

/// Binary layout, little-endian:
///   "GQDS" | u32 version | u32 d | f64 p | u64 count
///   per record: error, syndrome and target bit sets, each ceil(bits/8) bytes
///   with bit k at byte k/8, position k%8 | u8 source
std::vector<uint8_t> encode_dataset(const Dataset &ds);
/// Throws FormatError.
Dataset decode_dataset(std::span<const uint8_t> bytes);

void write_dataset(const std::filesystem::path &path, const Dataset &ds);
Dataset read_dataset(const std::filesystem::path &path);

}  // namespace gq
