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
#include <string>
#include <vector>

#include "gq/nn/tensor.hpp"

namespace gq::nn {

/// Kind byte of a record in the GQWT container.
enum class LayerKind : uint8_t { Conv = 0, Bn = 1, Fc = 2, Tensor = 3 };

struct LayerRecord {
    std::string name;
    LayerKind kind = LayerKind::Conv;
    std::vector<uint32_t> dims;
    std::vector<float> data;

    size_t numel() const;
    /// Views a rank-3 record as an H x W x C tensor. Throws ShapeMismatch.
    Tensor3 as_tensor() const;
    static LayerRecord from_tensor(std::string name, const Tensor3 &t);
};

inline constexpr uint32_t kWeightFormatVersion = 1;

/// Parsed metadata fields. The raw text is kept verbatim so that a
/// read/write round trip reproduces the file byte for byte.
struct WeightMetadata {
    uint32_t d = 0;
    std::string run_id;
    std::string network;  // "generator" or "discriminator"
    std::string content;  // "weights" or "golden"
    uint32_t layer_count = 0;
};

/// Ordered named tensors from a GQWT file (network weights or golden vectors).
///
/// Layout, all integers little-endian:
///   "GQWT" | u32 version | u32 metadata length | metadata JSON text
///   per record: u16 name length | name | u8 kind | u8 rank | u32 dims[rank]
///               | prod(dims) binary32 values, row-major
/// Conv kernels are [out][in][kh][kw].
struct ModelWeights {
    uint32_t format_version = kWeightFormatVersion;
    std::string metadata_text;
    WeightMetadata metadata;
    std::vector<LayerRecord> layers;

    const LayerRecord *find(std::string_view name) const;
    /// Throws SchemaMismatch when the record is absent.
    const LayerRecord &get(std::string_view name) const;
};

/// Serializes metadata to canonical JSON text (sorted keys, compact).
std::string format_metadata(const WeightMetadata &meta);

/// Sets metadata_text from metadata (layer_count taken from layers).
void refresh_metadata(ModelWeights &weights);

std::vector<uint8_t> encode_weights(const ModelWeights &weights);
/// Throws FormatError on malformed input.
ModelWeights decode_weights(std::span<const uint8_t> bytes);

std::vector<uint8_t> read_file_bytes(const std::filesystem::path &path);
ModelWeights read_weights(const std::filesystem::path &path);
/// Writes to a temporary sibling and renames it into place.
void write_weights(const std::filesystem::path &path, const ModelWeights &weights);

}  // namespace gq::nn
