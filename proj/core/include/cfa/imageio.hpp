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

#pragma once

// Binary Netpbm codec (P5 grayscale, P6 RGB) and CSV emission.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cfa/plane.hpp"

namespace cfa {

struct ExperimentRecord;

using Image = std::variant<Plane, RgbImage>;
using Bytes = std::vector<std::uint8_t>;

/// Decodes a binary PGM/PPM. Header comments (#...) are skipped.
/// Raw values v map to v / maxval. Throws DecodeError.
Image decode_pnm(std::span<const std::uint8_t> bytes);

/// bit_depth must be 8 or 16. Samples are clamped to [0,1] and quantized
/// with round-half-away-from-zero.
Bytes encode_pnm(const Plane& plane, int bit_depth = 8);
Bytes encode_pnm(const RgbImage& rgb, int bit_depth = 8);

/// Quantization used by encode_pnm, exposed for tests.
std::uint32_t quantize(double v, std::uint32_t maxval) noexcept;

Plane read_pgm(const std::filesystem::path& path);
RgbImage read_ppm(const std::filesystem::path& path);
Image read_pnm(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

/// Exact CSV header shared by write_csv and the CLI.
extern const char* const kCsvHeader;

/// Six significant digits, trailing zeros kept ("20.0000"); "inf" for +infinity.
std::string format_real(double v);

std::string csv_row(const ExperimentRecord& rec);
std::string write_csv(std::span<const ExperimentRecord> rows);

}  // namespace cfa
