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

#include "cfa/demosaic.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cfa/denoise.hpp"
#include "cfa/error.hpp"

namespace cfa {

namespace {

using Index = std::ptrdiff_t;

std::string short_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

class MosaicView {
public:
    explicit MosaicView(const MosaicImage& m) : m_(m) {}

    double at(Index r, Index c) const noexcept { return m_.plane().reflected(r, c); }

    // Reflect-101 keeps row/column parity, so the color of a reflected site
    // is the color of the unreflected coordinates.
    Color color(Index r, Index c) const noexcept {
        return m_.pattern().at(static_cast<std::size_t>(r & 1), static_cast<std::size_t>(c & 1));
    }

    double cross_mean(Index r, Index c) const noexcept {
        return 0.25 * (at(r - 1, c) + at(r + 1, c) + at(r, c - 1) + at(r, c + 1));
    }
    double diag_mean(Index r, Index c) const noexcept {
        return 0.25 * (at(r - 1, c - 1) + at(r - 1, c + 1) + at(r + 1, c - 1) + at(r + 1, c + 1));
    }
    double horiz_mean(Index r, Index c) const noexcept { return 0.5 * (at(r, c - 1) + at(r, c + 1)); }
    double vert_mean(Index r, Index c) const noexcept { return 0.5 * (at(r - 1, c) + at(r + 1, c)); }
    // Mean of the four same-color sites two pixels away along the axes.
    double ring2_mean(Index r, Index c) const noexcept {
        return 0.25 * (at(r - 2, c) + at(r + 2, c) + at(r, c - 2) + at(r, c + 2));
    }

private:
    const MosaicImage& m_;
};

double bilinear_at(const MosaicView& v, Index r, Index c, Color want) {
    const Color site = v.color(r, c);
    if (site == want) return v.at(r, c);
    if (want == Color::G) return v.cross_mean(r, c);
    if (site == Color::G) {
        return v.color(r, c + 1) == want ? v.horiz_mean(r, c) : v.vert_mean(r, c);
    }
    return v.diag_mean(r, c);
}

}  // namespace

void DemosaickerConfig::validate() const {
    if (kind != DemosaickerKind::joint_bilateral) return;
    if (!std::isfinite(sigma_s) || sigma_s <= 0.0 || !std::isfinite(sigma_r) || sigma_r <= 0.0) {
        throw ConfigError("joint-bilateral sigma_s and sigma_r must be finite and > 0");
    }
}

std::string DemosaickerConfig::label() const {
    if (kind == DemosaickerKind::joint_bilateral) {
        return "joint-bilateral(sigma_s=" + short_real(sigma_s) + ";sigma_r=" + short_real(sigma_r) +
               ")";
    }
    return std::string(to_string(kind));
}

std::string_view to_string(DemosaickerKind kind) {
    switch (kind) {
    case DemosaickerKind::bilinear: return "bilinear";
    case DemosaickerKind::gradient: return "gradient";
    case DemosaickerKind::joint_bilateral: return "joint-bilateral";
    }
    return "unknown";
}

std::optional<DemosaickerKind> parse_demosaicker_kind(std::string_view text) {
    if (text == "bilinear") return DemosaickerKind::bilinear;
    if (text == "gradient") return DemosaickerKind::gradient;
    if (text == "joint-bilateral" || text == "joint_bilateral") return DemosaickerKind::joint_bilateral;
    return std::nullopt;
}

RgbImage demosaic_bilinear(const MosaicImage& mosaic) {
    const MosaicView v(mosaic);
    RgbImage out(mosaic.width(), mosaic.height());
    const Index h = static_cast<Index>(mosaic.height());
    const Index w = static_cast<Index>(mosaic.width());
    for (Index r = 0; r < h; ++r) {
        for (Index c = 0; c < w; ++c) {
            for (int ch = 0; ch < 3; ++ch) {
                out.channel(ch)(r, c) = bilinear_at(v, r, c, static_cast<Color>(ch));
            }
        }
    }
    return out;
}

// Gradient-corrected linear interpolation with the 5x5 kernels of
// Malvar, He & Cutler (2004).
RgbImage demosaic_gradient(const MosaicImage& mosaic) {
    constexpr double kGainGreen = 1.0 / 2.0;     // G at R/B
    constexpr double kGainAtGreen = 5.0 / 8.0;   // R/B at G
    constexpr double kGainOpposite = 3.0 / 4.0;  // R at B, B at R

    const MosaicView v(mosaic);
    RgbImage out(mosaic.width(), mosaic.height());
    const Index h = static_cast<Index>(mosaic.height());
    const Index w = static_cast<Index>(mosaic.width());
    for (Index r = 0; r < h; ++r) {
        for (Index c = 0; c < w; ++c) {
            const Color site = v.color(r, c);
            const double x0 = v.at(r, c);
            for (int ch = 0; ch < 3; ++ch) {
                const Color want = static_cast<Color>(ch);
                double value = bilinear_at(v, r, c, want);
                if (site == want) {
                    // measured
                } else if (site != Color::G) {
                    const double gain = want == Color::G ? kGainGreen : kGainOpposite;
                    value += gain * (x0 - v.ring2_mean(r, c));
                } else {
                    // Own-channel (G) Laplacian, elongated along the axis on
                    // which `want` is sampled.
                    const bool along_row = v.color(r, c + 1) == want;
                    const double along = along_row ? v.at(r, c - 2) + v.at(r, c + 2)
                                                   : v.at(r - 2, c) + v.at(r + 2, c);
                    const double across = along_row ? v.at(r - 2, c) + v.at(r + 2, c)
                                                    : v.at(r, c - 2) + v.at(r, c + 2);
                    const double diag = v.at(r - 1, c - 1) + v.at(r - 1, c + 1) +
                                        v.at(r + 1, c - 1) + v.at(r + 1, c + 1);
                    const double correction = 5.0 * x0 - diag - along + 0.5 * across;
                    value += kGainAtGreen * correction / 5.0;
                }
                out.channel(ch)(r, c) = value;
            }
        }
    }
    return out;
}

RgbImage demosaic_joint_bilateral(const MosaicImage& mosaic, double sigma_s, double sigma_r) {
    DemosaickerConfig::joint_bilateral(sigma_s, sigma_r).validate();
    const Plane guide = demosaic_bilinear(mosaic).g;
    const MosaicView v(mosaic);
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

    RgbImage out(mosaic.width(), mosaic.height());
    const Index h = static_cast<Index>(mosaic.height());
    const Index w = static_cast<Index>(mosaic.width());
    for (Index r = 0; r < h; ++r) {
        for (Index c = 0; c < w; ++c) {
            const double g0 = guide(r, c);
            std::array<double, 3> num{};
            std::array<double, 3> den{};
            // Spatial-only sums, used when every range weight of a channel
            // underflows (tiny sigma_r on noisy input).
            std::array<double, 3> num_s{};
            std::array<double, 3> den_s{};
            for (Index dr = -rad; dr <= rad; ++dr) {
                for (Index dc = -rad; dc <= rad; ++dc) {
                    const Index qr = r + dr;
                    const Index qc = c + dc;
                    const double d = guide.reflected(qr, qc) - g0;
                    const double ws = spatial[(dr + rad) * span + (dc + rad)];
                    const double wgt = ws * std::exp(-d * d * range_scale);
                    const int ch = static_cast<int>(v.color(qr, qc));
                    const double value = v.at(qr, qc);
                    num[ch] += wgt * value;
                    den[ch] += wgt;
                    num_s[ch] += ws * value;
                    den_s[ch] += ws;
                }
            }
            for (int ch = 0; ch < 3; ++ch) {
                out.channel(ch)(r, c) = den[ch] > 0.0 ? num[ch] / den[ch] : num_s[ch] / den_s[ch];
            }
        }
    }
    return out;
}

RgbImage demosaic(const MosaicImage& mosaic, const DemosaickerConfig& cfg) {
    cfg.validate();
    switch (cfg.kind) {
    case DemosaickerKind::bilinear: return demosaic_bilinear(mosaic);
    case DemosaickerKind::gradient: return demosaic_gradient(mosaic);
    case DemosaickerKind::joint_bilateral:
        return demosaic_joint_bilateral(mosaic, cfg.sigma_s, cfg.sigma_r);
    }
    throw ConfigError("unknown demosaicker");
}

}  // namespace cfa
