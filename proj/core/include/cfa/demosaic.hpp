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

#include <optional>
#include <string>
#include <string_view>

#include "cfa/bayer.hpp"
#include "cfa/plane.hpp"

namespace cfa {

enum class DemosaickerKind { bilinear, gradient, joint_bilateral };

struct DemosaickerConfig {
    DemosaickerKind kind = DemosaickerKind::bilinear;
    double sigma_s = 1.0;   ///< joint_bilateral (pixels)
    double sigma_r = 0.1;   ///< joint_bilateral (intensity)

    static DemosaickerConfig bilinear() { return {DemosaickerKind::bilinear}; }
    static DemosaickerConfig gradient() { return {DemosaickerKind::gradient}; }
    static DemosaickerConfig joint_bilateral(double sigma_s, double sigma_r) {
        return {DemosaickerKind::joint_bilateral, sigma_s, sigma_r};
    }

    void validate() const;
    std::string label() const;
};

std::string_view to_string(DemosaickerKind kind);
/// Accepts "joint-bilateral" and "joint_bilateral".
std::optional<DemosaickerKind> parse_demosaicker_kind(std::string_view text);

/// Measured samples pass through; each missing sample is the mean of the
/// same-color sites in its 3x3 neighbourhood.
RgbImage demosaic_bilinear(const MosaicImage& mosaic);

/// Bilinear plus a gain-weighted Laplacian of the site's own channel
/// (fixed 5x5 kernels). May overshoot [0,1].
RgbImage demosaic_gradient(const MosaicImage& mosaic);

/// Every output sample is a bilateral-weighted mean of the same-color sites
/// within radius ceil(3 sigma_s). The range term compares bilinear G
/// estimates, so interpolation and smoothing happen in one pass.
RgbImage demosaic_joint_bilateral(const MosaicImage& mosaic, double sigma_s, double sigma_r);

RgbImage demosaic(const MosaicImage& mosaic, const DemosaickerConfig& cfg);

}  // namespace cfa
