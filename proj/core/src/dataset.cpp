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

#include "gq/dataset.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "gq/error.hpp"
#include "gq/homology.hpp"
#include "gq/matching.hpp"
#include "gq/noise.hpp"
#include "gq/nn/weights.hpp"
#include "gq/parallel.hpp"
#include "gq/rng.hpp"
#include "gq/syndrome.hpp"

namespace gq {

static_assert(std::endian::native == std::endian::little, "GQDS I/O assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'G', 'Q', 'D', 'S'};

// Redraw budget per record before giving up; only reached at absurd p.
constexpr int kMaxAttempts = 1 << 20;

template <typename Tag>
void put_bits(std::vector<uint8_t> &out, const Bits<Tag> &b) {
    const size_t nbytes = (b.size() + 7) / 8;
    const auto &words = b.words();
    for (size_t k = 0; k < nbytes; k++) {
        out.push_back(static_cast<uint8_t>(words[k / 8] >> (8 * (k % 8))));
    }
}

template <typename Tag>
Bits<Tag> get_bits(std::span<const uint8_t> in, size_t &pos, size_t num_bits) {
    const size_t nbytes = (num_bits + 7) / 8;
    if (nbytes > in.size() - pos) {
        throw Error(ErrorCode::FormatError, "dataset file truncated");
    }
    Bits<Tag> b(num_bits);
    for (size_t k = 0; k < nbytes; k++) {
        b.words()[k / 8] |= uint64_t{in[pos + k]} << (8 * (k % 8));
    }
    if (num_bits % 8 != 0 && (in[pos + nbytes - 1] >> (num_bits % 8)) != 0) {
        throw Error(ErrorCode::FormatError, "dataset record has padding bits set");
    }
    pos += nbytes;
    return b;
}

template <typename T>
void put(std::vector<uint8_t> &out, T v) {
    uint8_t buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    out.insert(out.end(), buf, buf + sizeof(T));
}

template <typename T>
T get(std::span<const uint8_t> in, size_t &pos) {
    if (sizeof(T) > in.size() - pos) {
        throw Error(ErrorCode::FormatError, "dataset file truncated");
    }
    T v;
    std::memcpy(&v, in.data() + pos, sizeof(T));
    pos += sizeof(T);
    return v;
}

// Moves `c` by row/column cycles so that its winding class becomes `cls`.
Correction shift_to_class(const ToricLayout &layout, Correction c, uint8_t cls) {
    Windings delta = logical_windings(layout, c) ^ Windings::from_index(cls);
    if (delta.horizontal) {
        c ^= layout.row_cycle();
    }
    if (delta.vertical) {
        c ^= layout.column_cycle();
    }
    return c;
}

}  // namespace

std::string_view to_string(TargetSource s) {
    return s == TargetSource::MlOracle ? "ml_oracle" : "mwpm";
}

Dataset generate_dataset(uint32_t d, double p, uint64_t count, TargetSource source, uint64_t seed) {
    NoiseConfig{NoiseModel::IndependentXZ, p, 0.0, seed}.validate();
    ToricLayout layout = build_layout(d);
    const CosetTable *table = nullptr;
    if (source == TargetSource::MlOracle) {
        if (d != CosetTable::kDistance) {
            throw Error(ErrorCode::DistanceTooLarge, "ml_oracle targets need the exhaustive table, only d=3");
        }
        table = &CosetTable::get(layout);
    }

    Dataset ds;
    ds.d = d;
    ds.p = p;
    ds.records.resize(count);
    parallel_for(count, [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            RngStream rng(seed, k);
            for (int attempt = 0;; attempt++) {
                if (attempt == kMaxAttempts) {
                    throw Error(ErrorCode::InvalidArgument, "no decodable sample found; p is too large");
                }
                DatasetRecord rec;
                rec.error = sample_iid(layout, p, rng);
                rec.syndrome = compute_syndrome(layout, rec.error);
                rec.source = source;
                rec.target = decode_mwpm(layout, rec.syndrome);
                if (table) {
                    size_t s = rec.syndrome.words().empty() ? 0 : rec.syndrome.words()[0];
                    rec.target = shift_to_class(layout, rec.target, table->ml_class(s, p));
                }
                if (judge(layout, rec.error, rec.target).success) {
                    ds.records[k] = std::move(rec);
                    break;
                }
            }
        }
    });
    return ds;
}

std::vector<uint8_t> encode_dataset(const Dataset &ds) {
    std::vector<uint8_t> out;
    out.insert(out.end(), kMagic, kMagic + 4);
    put<uint32_t>(out, kDatasetFormatVersion);
    put<uint32_t>(out, ds.d);
    put<double>(out, ds.p);
    put<uint64_t>(out, ds.records.size());
    const size_t edges = size_t{2} * ds.d * ds.d;
    const size_t checks = size_t{ds.d} * ds.d;
    for (const auto &r : ds.records) {
        if (r.error.size() != edges || r.target.size() != edges || r.syndrome.size() != checks) {
            throw Error(ErrorCode::SizeMismatch, "dataset record does not match d=" + std::to_string(ds.d));
        }
        put_bits(out, r.error);
        put_bits(out, r.syndrome);
        put_bits(out, r.target);
        out.push_back(static_cast<uint8_t>(r.source));
    }
    return out;
}

Dataset decode_dataset(std::span<const uint8_t> bytes) {
    size_t pos = 0;
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw Error(ErrorCode::FormatError, "bad magic, expected GQDS");
    }
    pos = 4;
    uint32_t version = get<uint32_t>(bytes, pos);
    if (version != kDatasetFormatVersion) {
        throw Error(ErrorCode::FormatError, "unsupported dataset version " + std::to_string(version));
    }
    Dataset ds;
    ds.d = get<uint32_t>(bytes, pos);
    ds.p = get<double>(bytes, pos);
    uint64_t count = get<uint64_t>(bytes, pos);
    if (ds.d == 0 || ds.d > 1024) {
        throw Error(ErrorCode::FormatError, "implausible distance " + std::to_string(ds.d));
    }
    const size_t edges = size_t{2} * ds.d * ds.d;
    const size_t checks = size_t{ds.d} * ds.d;
    const size_t record_bytes = 2 * ((edges + 7) / 8) + (checks + 7) / 8 + 1;
    if (count > (bytes.size() - pos) / record_bytes) {
        throw Error(ErrorCode::FormatError, "dataset declares more records than the file holds");
    }
    ds.records.reserve(count);
    for (uint64_t k = 0; k < count; k++) {
        DatasetRecord r;
        r.error = get_bits<EdgeTag>(bytes, pos, edges);
        r.syndrome = get_bits<CheckTag>(bytes, pos, checks);
        r.target = get_bits<EdgeTag>(bytes, pos, edges);
        uint8_t src = get<uint8_t>(bytes, pos);
        if (src > 1) {
            throw Error(ErrorCode::FormatError, "unknown target source " + std::to_string(src));
        }
        r.source = static_cast<TargetSource>(src);
        ds.records.push_back(std::move(r));
    }
    if (pos != bytes.size()) {
        throw Error(ErrorCode::FormatError, "trailing bytes after the last dataset record");
    }
    return ds;
}

void write_dataset(const std::filesystem::path &path, const Dataset &ds) {
    auto bytes = encode_dataset(ds);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::FormatError, "cannot write " + tmp.string());
        }
        out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            throw Error(ErrorCode::FormatError, "short write to " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

Dataset read_dataset(const std::filesystem::path &path) {
    auto bytes = nn::read_file_bytes(path);
    return decode_dataset(bytes);
}

}  // namespace gq
