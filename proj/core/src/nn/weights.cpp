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

#include "gq/nn/weights.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <json.hpp>

#include "gq/error.hpp"

namespace gq::nn {

static_assert(std::endian::native == std::endian::little, "GQWT I/O assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'G', 'Q', 'W', 'T'};

class Writer {
   public:
    void bytes(const void *src, size_t n) {
        auto p = static_cast<const uint8_t *>(src);
        out_.insert(out_.end(), p, p + n);
    }
    template <typename T>
    void scalar(T v) {
        bytes(&v, sizeof(T));
    }
    std::vector<uint8_t> take() {
        return std::move(out_);
    }

   private:
    std::vector<uint8_t> out_;
};

class Reader {
   public:
    explicit Reader(std::span<const uint8_t> in) : in_(in) {
    }
    void bytes(void *dst, size_t n) {
        if (n > in_.size() - pos_) {
            throw Error(ErrorCode::FormatError, "unexpected end of weight file at offset " + std::to_string(pos_));
        }
        std::memcpy(dst, in_.data() + pos_, n);
        pos_ += n;
    }
    template <typename T>
    T scalar() {
        T v;
        bytes(&v, sizeof(T));
        return v;
    }
    bool done() const {
        return pos_ == in_.size();
    }

   private:
    std::span<const uint8_t> in_;
    size_t pos_ = 0;
};

WeightMetadata parse_metadata(const std::string &text) {
    WeightMetadata meta;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &ex) {
        throw Error(ErrorCode::FormatError, std::string("metadata is not valid JSON: ") + ex.what());
    }
    if (!j.is_object()) {
        throw Error(ErrorCode::FormatError, "metadata must be a JSON object");
    }
    meta.d = j.value("d", 0u);
    meta.run_id = j.value("run_id", std::string());
    meta.network = j.value("network", std::string());
    meta.content = j.value("content", std::string("weights"));
    meta.layer_count = j.value("layer_count", 0u);
    return meta;
}

}  // namespace

size_t LayerRecord::numel() const {
    size_t n = 1;
    for (auto d : dims) {
        n *= d;
    }
    return n;
}

Tensor3 LayerRecord::as_tensor() const {
    if (dims.size() != 3) {
        throw Error(ErrorCode::ShapeMismatch, "record '" + name + "' is not rank 3");
    }
    Tensor3 t(dims[0], dims[1], dims[2]);
    std::copy(data.begin(), data.end(), t.values().begin());
    return t;
}

LayerRecord LayerRecord::from_tensor(std::string name, const Tensor3 &t) {
    LayerRecord r;
    r.name = std::move(name);
    r.kind = LayerKind::Tensor;
    r.dims = {t.height(), t.width(), t.channels()};
    r.data.assign(t.values().begin(), t.values().end());
    return r;
}

const LayerRecord *ModelWeights::find(std::string_view name) const {
    for (const auto &l : layers) {
        if (l.name == name) {
            return &l;
        }
    }
    return nullptr;
}

const LayerRecord &ModelWeights::get(std::string_view name) const {
    if (auto *l = find(name)) {
        return *l;
    }
    throw Error(ErrorCode::SchemaMismatch, "missing record '" + std::string(name) + "'");
}

std::string format_metadata(const WeightMetadata &meta) {
    nlohmann::json j;
    j["content"] = meta.content;
    j["d"] = meta.d;
    j["layer_count"] = meta.layer_count;
    j["network"] = meta.network;
    j["run_id"] = meta.run_id;
    return j.dump();
}

void refresh_metadata(ModelWeights &weights) {
    weights.metadata.layer_count = static_cast<uint32_t>(weights.layers.size());
    weights.metadata_text = format_metadata(weights.metadata);
}

std::vector<uint8_t> encode_weights(const ModelWeights &weights) {
    Writer w;
    w.bytes(kMagic, 4);
    w.scalar<uint32_t>(weights.format_version);
    w.scalar<uint32_t>(static_cast<uint32_t>(weights.metadata_text.size()));
    w.bytes(weights.metadata_text.data(), weights.metadata_text.size());
    for (const auto &layer : weights.layers) {
        if (layer.name.size() > UINT16_MAX) {
            throw Error(ErrorCode::FormatError, "layer name too long");
        }
        if (layer.dims.size() > UINT8_MAX) {
            throw Error(ErrorCode::FormatError, "layer rank too large");
        }
        if (layer.data.size() != layer.numel()) {
            throw Error(ErrorCode::ShapeMismatch, "record '" + layer.name + "' payload does not match its dims");
        }
        w.scalar<uint16_t>(static_cast<uint16_t>(layer.name.size()));
        w.bytes(layer.name.data(), layer.name.size());
        w.scalar<uint8_t>(static_cast<uint8_t>(layer.kind));
        w.scalar<uint8_t>(static_cast<uint8_t>(layer.dims.size()));
        for (auto d : layer.dims) {
            w.scalar<uint32_t>(d);
        }
        w.bytes(layer.data.data(), layer.data.size() * sizeof(float));
    }
    return w.take();
}

ModelWeights decode_weights(std::span<const uint8_t> bytes) {
    Reader r(bytes);
    char magic[4];
    r.bytes(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0) {
        throw Error(ErrorCode::FormatError, "bad magic, expected GQWT");
    }
    ModelWeights out;
    out.format_version = r.scalar<uint32_t>();
    if (out.format_version != kWeightFormatVersion) {
        throw Error(ErrorCode::FormatError, "unsupported format version " + std::to_string(out.format_version));
    }
    uint32_t meta_len = r.scalar<uint32_t>();
    out.metadata_text.resize(meta_len);
    r.bytes(out.metadata_text.data(), meta_len);
    out.metadata = parse_metadata(out.metadata_text);
    while (!r.done()) {
        LayerRecord layer;
        uint16_t name_len = r.scalar<uint16_t>();
        layer.name.resize(name_len);
        r.bytes(layer.name.data(), name_len);
        uint8_t kind = r.scalar<uint8_t>();
        if (kind > static_cast<uint8_t>(LayerKind::Tensor)) {
            throw Error(ErrorCode::FormatError, "unknown layer kind " + std::to_string(kind));
        }
        layer.kind = static_cast<LayerKind>(kind);
        uint8_t rank = r.scalar<uint8_t>();
        layer.dims.resize(rank);
        for (auto &d : layer.dims) {
            d = r.scalar<uint32_t>();
        }
        size_t n = layer.numel();
        if (n > (size_t{1} << 32)) {
            throw Error(ErrorCode::FormatError, "record '" + layer.name + "' is implausibly large");
        }
        layer.data.resize(n);
        r.bytes(layer.data.data(), n * sizeof(float));
        out.layers.push_back(std::move(layer));
    }
    if (out.metadata.layer_count != out.layers.size()) {
        throw Error(
            ErrorCode::FormatError, "metadata declares " + std::to_string(out.metadata.layer_count) +
                                        " records, file has " + std::to_string(out.layers.size()));
    }
    return out;
}

std::vector<uint8_t> read_file_bytes(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::FormatError, "cannot open " + path.string());
    }
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

ModelWeights read_weights(const std::filesystem::path &path) {
    auto bytes = read_file_bytes(path);
    return decode_weights(bytes);
}

void write_weights(const std::filesystem::path &path, const ModelWeights &weights) {
    auto bytes = encode_weights(weights);
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

}  // namespace gq::nn
