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

enum class DenoiserKind { gaussian, median, bilateral, wavelet };

struct DenoiserConfig {
    DenoiserKind kind = DenoiserKind::wavelet;
    double sigma_s = 1.0;   ///< gaussian, bilateral (pixels)
    int radius = 1;         ///< median (pixels)
    double sigma_r = 0.1;   ///< bilateral (intensity)
    int levels = 3;         ///< wavelet
    /// Wavelet noise level; empty means estimate it from the input.
    std::optional<double> sigma_n;

    static DenoiserConfig gaussian(double sigma_s);
    static DenoiserConfig median(int radius);
    static DenoiserConfig bilateral(double sigma_s, double sigma_r);
    static DenoiserConfig wavelet(int levels, std::optional<double> sigma_n);
    /// The configuration that leaves every plane untouched
    /// (wavelet with sigma_n = 0).
    static DenoiserConfig identity();

    /// Throws ConfigError when the parameters used by `kind` are invalid.
    void validate() const;
    /// Compact CSV-safe label, e.g. "wavelet(levels=3;sigma_n=auto)".
    std::string label() const;
};

std::string_view to_string(DenoiserKind kind);
std::optional<DenoiserKind> parse_denoiser_kind(std::string_view text);

/// Window radius used by the Gaussian and bilateral kernels: ceil(3 sigma).
int kernel_radius(double sigma_s) noexcept;

/// Normalized 1-D Gaussian taps of length 2*kernel_radius(sigma_s)+1.
std::vector<double> gaussian_kernel(double sigma_s);

Plane denoise_gaussian(const Plane& plane, double sigma_s);
Plane denoise_median(const Plane& plane, int radius);
Plane denoise_bilateral(const Plane& plane, double sigma_s, double sigma_r);
/// BayesShrink soft thresholding of every detail band; LL is kept.
Plane denoise_wavelet(const Plane& plane, int levels, std::optional<double> sigma_n);

/// Soft threshold: sign(x) * max(|x| - t, 0).
inline double soft_threshold(double x, double t) noexcept {
    const double m = (x < 0 ? -x : x) - t;
    if (m <= 0) return 0.0;
    return x < 0 ? -m : m;
}

/// BayesShrink threshold for a detail band with mean square `band_power`
/// at noise level sigma_n. Returns +inf when the band should be zeroed
/// and 0 when sigma_n == 0.
double bayes_shrink_threshold(double band_power, double sigma_n) noexcept;

Plane denoise(const Plane& plane, const DenoiserConfig& cfg);

/// Runs the configured denoiser on each of r, g1, g2, b independently.
SubImages denoise_subimages(const SubImages& subs, const DenoiserConfig& cfg);

}  // namespace cfa
