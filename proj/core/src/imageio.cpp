// Copyright (c) 2026 The cfa-denoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cfa/imageio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "cfa/error.hpp"
#include "cfa/pipeline.hpp"

namespace cfa {

const char* to_string(DecodeErrc code) {
    switch (code) {
    case DecodeErrc::malformed_header: return "malformed header";
    case DecodeErrc::truncated_raster: return "truncated raster";
    case DecodeErrc::unsupported_magic: return "unsupported magic";
    case DecodeErrc::unsupported_maxval: return "unsupported maxval";
    }
    return "decode error";
}

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const auto ch = bytes_[pos_];
            if (ch == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else if (std::isspace(ch)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::uint64_t number(const char* what) {
        skip_space_and_comments();
        std::uint64_t value = 0;
        std::size_t digits = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > std::numeric_limits<std::uint32_t>::max()) {
                throw DecodeError(DecodeErrc::malformed_header, std::string(what) + " too large");
            }
            ++pos_;
            ++digits;
        }
        if (digits == 0) {
            throw DecodeError(DecodeErrc::malformed_header, std::string("expected ") + what);
        }
        return value;
    }

    // Exactly one whitespace byte separates maxval from the raster.
    void raster_separator() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            throw DecodeError(DecodeErrc::malformed_header, "missing whitespace after maxval");
        }
        ++pos_;
    }

    std::size_t pos() const noexcept { return pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

void append_header(Bytes& out, char kind, std::size_t w, std::size_t h, std::uint32_t maxval) {
    const std::string header = std::string("P") + kind + " " + std::to_string(w) + " " +
                               std::to_string(h) + " " + std::to_string(maxval) + "\n";
    out.insert(out.end(), header.begin(), header.end());
}

void append_sample(Bytes& out, double v, std::uint32_t maxval) {
    const auto q = quantize(v, maxval);
    if (maxval > 255) out.push_back(static_cast<std::uint8_t>(q >> 8));
    out.push_back(static_cast<std::uint8_t>(q & 0xFF));
}

std::uint32_t maxval_for(int bit_depth) {
    if (bit_depth == 8) return 255;
    if (bit_depth == 16) return 65535;
    throw ConfigError("bit depth must be 8 or 16, got " + std::to_string(bit_depth));
}

}  // namespace

Image decode_pnm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') {
        throw DecodeError(DecodeErrc::malformed_header, "missing Netpbm magic");
    }
    const char kind = static_cast<char>(bytes[1]);
    if (kind != '5' && kind != '6') {
        if (kind >= '1' && kind <= '7') {
            throw DecodeError(DecodeErrc::unsupported_magic,
                              std::string("P") + kind + " is not supported (binary P5/P6 only)");
        }
        throw DecodeError(DecodeErrc::malformed_header, "unknown magic");
    }
    HeaderReader reader(bytes.subspan(2));
    if (bytes.size() > 2 && !std::isspace(bytes[2]) && bytes[2] != '#') {
        throw DecodeError(DecodeErrc::malformed_header, "no separator after magic");
    }
    const auto width = reader.number("width");
    const auto height = reader.number("height");
    const auto maxval = reader.number("maxval");
    if (width == 0 || height == 0) {
        throw DecodeError(DecodeErrc::malformed_header, "zero image dimension");
    }
    if (maxval != 255 && maxval != 65535) {
        throw DecodeError(DecodeErrc::unsupported_maxval,
                          "maxval " + std::to_string(maxval) + " (expected 255 or 65535)");
    }
    reader.raster_separator();

    const std::size_t channels = kind == '6' ? 3 : 1;
    const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
    const std::size_t count = width * height * channels;
    const auto raster = bytes.subspan(2 + reader.pos());
    if (raster.size() < count * bytes_per_sample) {
        throw DecodeError(DecodeErrc::truncated_raster,
                          "need " + std::to_string(count * bytes_per_sample) + " bytes, have " +
                              std::to_string(raster.size()));
    }

    const double scale = 1.0 / static_cast<double>(maxval);
    auto sample = [&](std::size_t i) {
        if (bytes_per_sample == 1) return raster[i] * scale;
        return static_cast<double>((raster[2 * i] << 8) | raster[2 * i + 1]) * scale;
    };

    if (channels == 1) {
        std::vector<double> v(count);
        for (std::size_t i = 0; i < count; ++i) v[i] = sample(i);
        return Plane(width, height, std::move(v));
    }
    RgbImage rgb(width, height);
    const std::size_t n = width * height;
    for (std::size_t i = 0; i < n; ++i) {
        rgb.r.samples()[i] = sample(3 * i);
        rgb.g.samples()[i] = sample(3 * i + 1);
        rgb.b.samples()[i] = sample(3 * i + 2);
    }
    return rgb;
}

std::uint32_t quantize(double v, std::uint32_t maxval) noexcept {
    if (!(v > 0.0)) return 0;  // also maps NaN to 0
    if (v >= 1.0) return maxval;
    // std::round is half-away-from-zero.
    return static_cast<std::uint32_t>(std::round(v * maxval));
}

Bytes encode_pnm(const Plane& plane, int bit_depth) {
    const auto maxval = maxval_for(bit_depth);
    Bytes out;
    out.reserve(32 + plane.size() * (bit_depth / 8));
    append_header(out, '5', plane.width(), plane.height(), maxval);
    for (double v : plane.samples()) append_sample(out, v, maxval);
    return out;
}

Bytes encode_pnm(const RgbImage& rgb, int bit_depth) {
    const auto maxval = maxval_for(bit_depth);
    Bytes out;
    const std::size_t n = rgb.r.size();
    out.reserve(32 + 3 * n * (bit_depth / 8));
    append_header(out, '6', rgb.width(), rgb.height(), maxval);
    for (std::size_t i = 0; i < n; ++i) {
        append_sample(out, rgb.r.samples()[i], maxval);
        append_sample(out, rgb.g.samples()[i], maxval);
        append_sample(out, rgb.b.samples()[i], maxval);
    }
    return out;
}

namespace {

Bytes read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("error reading " + path.string());
    return data;
}

}  // namespace

Image read_pnm(const std::filesystem::path& path) {
    const auto data = read_file(path);
    return decode_pnm(data);
}

Plane read_pgm(const std::filesystem::path& path) {
    auto img = read_pnm(path);
    if (auto* p = std::get_if<Plane>(&img)) return std::move(*p);
    throw DecodeError(DecodeErrc::unsupported_magic, path.string() + " is a PPM, expected PGM");
}

RgbImage read_ppm(const std::filesystem::path& path) {
    auto img = read_pnm(path);
    if (auto* p = std::get_if<RgbImage>(&img)) return std::move(*p);
    throw DecodeError(DecodeErrc::unsupported_magic, path.string() + " is a PGM, expected PPM");
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("error writing " + path.string());
}

// ---------------------------------------------------------------------------
// CSV

const char* const kCsvHeader =
    "image,pattern,strategy,denoiser,demosaicker,sigma_r,sigma_g,sigma_b,seed,"
    "mse_r,mse_g,mse_b,psnr_r_db,psnr_g_db,psnr_b_db,cpsnr_db,wall_ms";

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.6g", v);
    return buf;
}

namespace {

// Fields are either library-generated labels or user-supplied image ids.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string csv_row(const ExperimentRecord& rec) {
    std::string line;
    line += csv_field(rec.image) + ',' + csv_field(rec.pattern) + ',' + csv_field(rec.strategy) +
            ',' + csv_field(rec.denoiser) + ',' + csv_field(rec.demosaicker) + ',';
    line += format_real(rec.sigma_r) + ',' + format_real(rec.sigma_g) + ',' +
            format_real(rec.sigma_b) + ',';
    line += std::to_string(rec.seed) + ',';
    for (double m : rec.mse) line += format_real(m) + ',';
    for (double p : rec.psnr_db) line += format_real(p) + ',';
    line += format_real(rec.cpsnr_db) + ',';
    line += rec.wall_ms ? format_real(*rec.wall_ms) : std::string("na");
    return line;
}

std::string write_csv(std::span<const ExperimentRecord> rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& rec : rows) {
        out += csv_row(rec);
        out += '\n';
    }
    return out;
}

}  // namespace cfa
