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

#include <cstddef>
#include <vector>

#include "cfa/plane.hpp"

namespace cfa {

/// Detail bands of one decomposition scale. LH holds horizontal-lowpass /
/// vertical-highpass coefficients, HL the transpose, HH the diagonal.
struct WaveletLevel {
    Plane lh;
    Plane hl;
    Plane hh;

    friend bool operator==(const WaveletLevel&, const WaveletLevel&) = default;
};

/// Separable orthonormal Haar pyramid. details[0] is the finest scale;
/// `approx` is the LL band of the coarsest one.
struct WaveletPyramid {
    Plane approx;
    std::vector<WaveletLevel> details;

    std::size_t levels() const noexcept { return details.size(); }
    std::size_t coefficient_count() const noexcept;
    double energy() const noexcept;

    friend bool operator==(const WaveletPyramid&, const WaveletPyramid&) = default;
};

/// Throws DimensionError unless width and height are divisible by 2^levels,
/// or ConfigError if levels == 0.
WaveletPyramid dwt_haar(const Plane& plane, std::size_t levels);

/// Throws DimensionError if band shapes are inconsistent.
Plane idwt_haar(const WaveletPyramid& pyr);

}  // namespace cfa
