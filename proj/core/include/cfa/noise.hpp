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

#include <cstdint>

#include "cfa/bayer.hpp"
#include "cfa/plane.hpp"

namespace cfa {

/// SplitMix64. The noise stream is defined in terms of this generator so
/// that golden outputs do not depend on the standard library.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in (0, 1].
    double uniform_open0() noexcept {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }
    /// Uniform in [0, 1).
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (cosine branch). Consumes exactly two
    /// 64-bit draws.
    double normal() noexcept;

private:
    std::uint64_t state_;
};

/// The SplitMix64 output finalizer alone, used for seed derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

struct NoiseSpec {
    double sigma_r = 0.0;
    double sigma_g = 0.0;
    double sigma_b = 0.0;
    std::uint64_t seed = 0;

    static NoiseSpec uniform(double sigma, std::uint64_t seed) {
        return {sigma, sigma, sigma, seed};
    }
    double sigma_for(Color c) const noexcept {
        return c == Color::R ? sigma_r : (c == Color::G ? sigma_g : sigma_b);
    }
    /// Throws ConfigError on negative or non-finite sigmas.
    void validate() const;
};

/// Adds N(0, sigma^2) per sample, sigma chosen by the site's color.
/// One normal is drawn for every sample in row-major order, whatever its
/// sigma, so per-class fields stay aligned across specs. Not clipped.
MosaicImage add_awgn(const MosaicImage& mosaic, const NoiseSpec& spec);

/// Raw noise field of the generator, used by add_awgn: sample i (row-major)
/// is the i-th normal of SplitMix64(seed).
Plane gaussian_field(std::size_t width, std::size_t height, std::uint64_t seed);

/// median(|HH|) / 0.6745 over the finest diagonal band of a one-level
/// orthonormal Haar transform. Odd trailing rows/columns are ignored.
double estimate_sigma(const Plane& plane);

inline constexpr double kMadToSigma = 0.6745;

}  // namespace cfa
