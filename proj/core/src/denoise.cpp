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

#include "cfa/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "cfa/error.hpp"
#include "cfa/noise.hpp"
#include "cfa/wavelet.hpp"

namespace cfa {

namespace {

std::string short_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw ConfigError(std::string(name) + " must be finite and > 0");
    }
}

using Index = std::ptrdiff_t;

}  // namespace

DenoiserConfig DenoiserConfig::gaussian(double sigma_s) {
    DenoiserConfig c;
    c.kind = DenoiserKind::gaussian;
    c.sigma_s = sigma_s;
    return c;
}

DenoiserConfig DenoiserConfig::median(int radius) {
    DenoiserConfig c;
    c.kind = DenoiserKind::median;
    c.radius = radius;
    return c;
}

DenoiserConfig DenoiserConfig::bilateral(double sigma_s, double sigma_r) {
    DenoiserConfig c;
    c.kind = DenoiserKind::bilateral;
    c.sigma_s = sigma_s;
    c.sigma_r = sigma_r;
    return c;
}

DenoiserConfig DenoiserConfig::wavelet(int levels, std::optional<double> sigma_n) {
    DenoiserConfig c;
    c.kind = DenoiserKind::wavelet;
    c.levels = levels;
    c.sigma_n = sigma_n;
    return c;
}

DenoiserConfig DenoiserConfig::identity() { return wavelet(1, 0.0); }

void DenoiserConfig::validate() const {
    switch (kind) {
    case DenoiserKind::gaussian: require_positive(sigma_s, "gaussian sigma_s"); break;
    case DenoiserKind::median:
        if (radius < 1) throw ConfigError("median radius must be >= 1");
        break;
    case DenoiserKind::bilateral:
        require_positive(sigma_s, "bilateral sigma_s");
        require_positive(sigma_r, "bilateral sigma_r");
        break;
    case DenoiserKind::wavelet:
        if (levels < 1) throw ConfigError("wavelet levels must be >= 1");
        if (sigma_n && (!std::isfinite(*sigma_n) || *sigma_n < 0.0)) {
            throw ConfigError("wavelet sigma_n must be finite and >= 0");
        }
        break;
    }
}

std::string DenoiserConfig::label() const {
    switch (kind) {
    case DenoiserKind::gaussian: return "gaussian(sigma_s=" + short_real(sigma_s) + ")";
    case DenoiserKind::median: return "median(radius=" + std::to_string(radius) + ")";
    case DenoiserKind::bilateral:
        return "bilateral(sigma_s=" + short_real(sigma_s) + ";sigma_r=" + short_real(sigma_r) + ")";
    case DenoiserKind::wavelet:
        return "wavelet(levels=" + std::to_string(levels) +
               ";sigma_n=" + (sigma_n ? short_real(*sigma_n) : std::string("auto")) + ")";
    }
    return "unknown";
}

std::string_view to_string(DenoiserKind kind) {
    switch (kind) {
    case DenoiserKind::gaussian: return "gaussian";
    case DenoiserKind::median: return "median";
    case DenoiserKind::bilateral: return "bilateral";
    case DenoiserKind::wavelet: return "wavelet";
    }
    return "unknown";
}

std::optional<DenoiserKind> parse_denoiser_kind(std::string_view text) {
    for (auto k : {DenoiserKind::gaussian, DenoiserKind::median, DenoiserKind::bilateral,
                   DenoiserKind::wavelet}) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

int kernel_radius(double sigma_s) noexcept {
    return std::max(1, static_cast<int>(std::ceil(3.0 * sigma_s)));
}

std::vector<double> gaussian_kernel(double sigma_s) {
    require_positive(sigma_s, "sigma_s");
    const int radius = kernel_radius(sigma_s);
    std::vector<double> k(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        k[i + radius] = std::exp(-(i * i) / (2.0 * sigma_s * sigma_s));
        sum += k[i + radius];
    }
    for (double& v : k) v /= sum;
    return k;
}

Plane denoise_gaussian(const Plane& plane, double sigma_s) {
    const auto k = gaussian_kernel(sigma_s);
    const Index radius = static_cast<Index>(k.size() / 2);
    const Index w = static_cast<Index>(plane.width());
    const Index h = static_cast<Index>(plane.height());

    Plane tmp(plane.width(), plane.height());
    for (Index r = 0; r < h; ++r) {
        for (Index c = 0; c < w; ++c) {
            double acc = 0.0;
            for (Index i = -radius; i <= radius; ++i) acc += k[i + radius] * plane.reflected(r, c + i);
            tmp(r, c) = acc;
        }
    }
    Plane out(plane.width(), plane.height());
    for (Index r = 0; r < h; ++r) {
        for (Index c = 0; c < w; ++c) {
            double acc = 0.0;
            for (Index i = -radius; i <= radius; ++i) acc += k[i + radius] * tmp.reflected(r + i, c);
            out(r, c) = acc;
        }
    }
    return out;
}

Plane denoise_median(const Plane& plane, int radius) {
    if (radius < 1) throw ConfigError("median radius must be >= 1");
    const Index w = static_cast<Index>(plane.width());
    const Index h = static_cast<Index>(plane.height());
    const Index rad = radius;
    std::vector<double> window(static_cast<std::size_t>((2 * rad + 1) * (2 * rad + 1)));
    const auto mid = window.begin() + static_cast<Index>(window.size() / 2);
    Plane out(plane.width(), plane.height());
    for (Index r = 0; r < h; ++r) {
        for (Index c = 0; c < w; ++c) {
            std::size_t n = 0;
            for (Index dr = -rad; dr <= rad; ++dr) {
                for (Index dc = -rad; dc <= rad; ++dc) window[n++] = plane.reflected(r + dr, c + dc);
            }
            std::nth_element(window.begin(), mid, window.end());
            out(r, c) = *mid;
        }
    }
    return out;
}

Plane denoise_bilateral(const Plane& plane, double sigma_s, double sigma_r) {
    require_positive(sigma_s, "bilateral sigma_s");
    require_positive(sigma_r, "bilateral sigma_r");
    const Index rad = kernel_radius(sigma_s);
    const Index span = 2 * rad + 1;
    std::vector<double> spatial(static_cast<std::size_t>(span * span));
    for (Index dr = -rad; dr <= rad; ++dr) {
        for (Index dc = -rad; dc <= rad; ++dc) {
            spatial[(dr + rad) * span + (dc + rad)] =
                std::exp(-static_cast<double>(dr * dr + dc * dc) / (2.0 * sigma_s * sigma_s));
        }
    }
    const double range_scale = 1.0 / (2.0 * sigma_r * sigma_r);
    const Index w = static_cast<Index>(plane.width());
    const Index h = static_cast<Index>(plane.height());
    Plane out(plane.width(), plane.height());
    for (Index r = 0; r < h; ++r) {
        for (Index c = 0; c < w; ++c) {
            const double center = plane(r, c);
            double num = 0.0;
            double den = 0.0;
            for (Index dr = -rad; dr <= rad; ++dr) {
                for (Index dc = -rad; dc <= rad; ++dc) {
                    const double v = plane.reflected(r + dr, c + dc);
                    const double d = v - center;
                    const double wgt = spatial[(dr + rad) * span + (dc + rad)] *
                                       std::exp(-d * d * range_scale);
                    num += wgt * v;
                    den += wgt;
                }
            }
            out(r, c) = num / den;
        }
    }
    return out;
}

double bayes_shrink_threshold(double band_power, double sigma_n) noexcept {
    if (sigma_n <= 0.0) return 0.0;
    const double noise_var = sigma_n * sigma_n;
    const double signal_var = std::max(band_power - noise_var, 0.0);
    if (signal_var <= 0.0) return std::numeric_limits<double>::infinity();
    return noise_var / std::sqrt(signal_var);
}

namespace {

void shrink_band(Plane& band, double sigma_n) {
    double power = 0.0;
    for (double v : band.samples()) power += v * v;
    power /= static_cast<double>(band.size());
    const double t = bayes_shrink_threshold(power, sigma_n);
    if (t == 0.0) return;
    if (std::isinf(t)) {
        std::fill(band.samples().begin(), band.samples().end(), 0.0);
        return;
    }
    for (double& v : band.samples()) v = soft_threshold(v, t);
}

}  // namespace

Plane denoise_wavelet(const Plane& plane, int levels, std::optional<double> sigma_n) {
    if (levels < 1) throw ConfigError("wavelet levels must be >= 1");
    const double noise = sigma_n ? *sigma_n : estimate_sigma(plane);
    if (!std::isfinite(noise) || noise < 0.0) throw ConfigError("wavelet sigma_n must be >= 0");
    WaveletPyramid pyr = dwt_haar(plane, static_cast<std::size_t>(levels));
    if (noise == 0.0) return plane;
    for (auto& level : pyr.details) {
        shrink_band(level.lh, noise);
        shrink_band(level.hl, noise);
        shrink_band(level.hh, noise);
    }
    return idwt_haar(pyr);
}

Plane denoise(const Plane& plane, const DenoiserConfig& cfg) {
    cfg.validate();
    switch (cfg.kind) {
    case DenoiserKind::gaussian: return denoise_gaussian(plane, cfg.sigma_s);
    case DenoiserKind::median: return denoise_median(plane, cfg.radius);
    case DenoiserKind::bilateral: return denoise_bilateral(plane, cfg.sigma_s, cfg.sigma_r);
    case DenoiserKind::wavelet: return denoise_wavelet(plane, cfg.levels, cfg.sigma_n);
    }
    throw ConfigError("unknown denoiser");
}

SubImages denoise_subimages(const SubImages& subs, const DenoiserConfig& cfg) {
    SubImages out = subs;
    out.r = denoise(subs.r, cfg);
    out.g1 = denoise(subs.g1, cfg);
    out.g2 = denoise(subs.g2, cfg);
    out.b = denoise(subs.b, cfg);
    return out;
}

}  // namespace cfa
