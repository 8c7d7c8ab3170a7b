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

#include "cfa/bayer.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "cfa/error.hpp"

namespace cfa {

std::array<std::size_t, 2> CfaPattern::site(Color c, bool second) const noexcept {
    bool seen = false;
    for (std::size_t i = 0; i < 4; ++i) {
        if (tile(phase_)[i] != c) continue;
        if (c == Color::G && second && !seen) {
            seen = true;
            continue;
        }
        return {i / 2, i % 2};
    }
    return {0, 0};
}

std::string_view CfaPattern::name() const noexcept {
    switch (phase_) {
    case Phase::RGGB: return "rggb";
    case Phase::GRBG: return "grbg";
    case Phase::GBRG: return "gbrg";
    case Phase::BGGR: return "bggr";
    }
    return "gbrg";
}

std::optional<CfaPattern> CfaPattern::parse(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (auto p : kAllPatterns) {
        if (p.name() == lower) return p;
    }
    return std::nullopt;
}

MosaicImage::MosaicImage(CfaPattern pattern, Plane plane)
    : pattern_(pattern), plane_(std::move(plane)) {
    if (plane_.width() % 2 != 0 || plane_.height() % 2 != 0 || plane_.empty()) {
        throw DimensionError("mosaic needs even dimensions, got " + std::to_string(plane_.width()) +
                             "x" + std::to_string(plane_.height()));
    }
}

MosaicImage mosaic_from_rgb(const RgbImage& rgb, CfaPattern pattern) {
    const auto w = rgb.width();
    const auto h = rgb.height();
    if (w % 2 != 0 || h % 2 != 0 || w == 0 || h == 0) {
        throw DimensionError("mosaic needs even dimensions, got " + std::to_string(w) + "x" +
                             std::to_string(h));
    }
    Plane out(w, h);
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) {
            out(r, c) = rgb.channel(static_cast<int>(pattern.at(r, c)))(r, c);
        }
    }
    return MosaicImage(pattern, std::move(out));
}

namespace {

struct SiteRef {
    std::size_t row;
    std::size_t col;
};

// Tile offsets of r, g1, g2, b in that order.
std::array<SiteRef, 4> sub_sites(CfaPattern p) {
    const auto r = p.site(Color::R);
    const auto g1 = p.site(Color::G, false);
    const auto g2 = p.site(Color::G, true);
    const auto b = p.site(Color::B);
    return {SiteRef{r[0], r[1]}, SiteRef{g1[0], g1[1]}, SiteRef{g2[0], g2[1]},
            SiteRef{b[0], b[1]}};
}

}  // namespace

SubImages decompose(const MosaicImage& mosaic) {
    const auto hw = mosaic.width() / 2;
    const auto hh = mosaic.height() / 2;
    SubImages subs{Plane(hw, hh), Plane(hw, hh), Plane(hw, hh), Plane(hw, hh),
                   mosaic.pattern(), mosaic.width(), mosaic.height()};
    std::array<Plane*, 4> dst{&subs.r, &subs.g1, &subs.g2, &subs.b};
    const auto sites = sub_sites(mosaic.pattern());
    const auto& src = mosaic.plane();
    for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t r = 0; r < hh; ++r) {
            for (std::size_t c = 0; c < hw; ++c) {
                (*dst[k])(r, c) = src(2 * r + sites[k].row, 2 * c + sites[k].col);
            }
        }
    }
    return subs;
}

MosaicImage recompose(const SubImages& subs) {
    const auto hw = subs.full_width / 2;
    const auto hh = subs.full_height / 2;
    if (subs.full_width % 2 != 0 || subs.full_height % 2 != 0 || hw == 0 || hh == 0) {
        throw DimensionError("sub-images describe a mosaic without even dimensions");
    }
    std::array<const Plane*, 4> src{&subs.r, &subs.g1, &subs.g2, &subs.b};
    for (const Plane* p : src) {
        if (p->width() != hw || p->height() != hh) {
            throw DimensionError("sub-plane is " + std::to_string(p->width()) + "x" +
                                 std::to_string(p->height()) + ", expected " + std::to_string(hw) +
                                 "x" + std::to_string(hh));
        }
    }
    Plane out(subs.full_width, subs.full_height);
    const auto sites = sub_sites(subs.pattern);
    for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t r = 0; r < hh; ++r) {
            for (std::size_t c = 0; c < hw; ++c) {
                out(2 * r + sites[k].row, 2 * c + sites[k].col) = (*src[k])(r, c);
            }
        }
    }
    return MosaicImage(subs.pattern, std::move(out));
}

}  // namespace cfa
