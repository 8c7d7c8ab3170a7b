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

#include "cfa/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cfa/error.hpp"

namespace cfa {

double SplitMix64::normal() noexcept {
    const double u1 = uniform_open0();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void NoiseSpec::validate() const {
    for (double s : {sigma_r, sigma_g, sigma_b}) {
        if (!std::isfinite(s) || s < 0.0) throw ConfigError("noise sigma must be finite and >= 0");
    }
}

Plane gaussian_field(std::size_t width, std::size_t height, std::uint64_t seed) {
    Plane field(width, height);
    SplitMix64 rng(seed);
    for (double& v : field.samples()) v = rng.normal();
    return field;
}

MosaicImage add_awgn(const MosaicImage& mosaic, const NoiseSpec& spec) {
    spec.validate();
    MosaicImage out = mosaic;
    SplitMix64 rng(spec.seed);
    Plane& p = out.plane();
    for (std::size_t r = 0; r < p.height(); ++r) {
        for (std::size_t c = 0; c < p.width(); ++c) {
            const double z = rng.normal();
            const double sigma = spec.sigma_for(mosaic.color_at(r, c));
            if (sigma > 0.0) p(r, c) += sigma * z;
        }
    }
    return out;
}

double estimate_sigma(const Plane& plane) {
    if (plane.width() < 2 || plane.height() < 2) {
        throw DimensionError("estimate_sigma needs at least a 2x2 plane");
    }
    const std::size_t hw = plane.width() / 2;
    const std::size_t hh = plane.height() / 2;
    std::vector<double> mags;
    mags.reserve(hw * hh);
    for (std::size_t r = 0; r < hh; ++r) {
        for (std::size_t c = 0; c < hw; ++c) {
            const double a = plane(2 * r, 2 * c);
            const double b = plane(2 * r, 2 * c + 1);
            const double d = plane(2 * r + 1, 2 * c);
            const double e = plane(2 * r + 1, 2 * c + 1);
            mags.push_back(std::abs(a - b - d + e) * 0.5);
        }
    }
    const auto mid = mags.begin() + static_cast<std::ptrdiff_t>(mags.size() / 2);
    std::nth_element(mags.begin(), mid, mags.end());
    double median = *mid;
    if (mags.size() % 2 == 0) {
        const double lower = *std::max_element(mags.begin(), mid);
        median = 0.5 * (median + lower);
    }
    return median / kMadToSigma;
}

}  // namespace cfa
