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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "cfa/plane.hpp"

namespace cfa {

enum class Color : int { R = 0, G = 1, B = 2 };

/// One of the four 2x2 Bayer phases, named by reading the tile row-major
/// starting at pixel (0, 0).
class CfaPattern {
public:
    enum class Phase { RGGB, GRBG, GBRG, BGGR };

    constexpr CfaPattern() = default;
    constexpr explicit CfaPattern(Phase p) : phase_(p) {}

    constexpr Phase phase() const noexcept { return phase_; }

    constexpr Color at(std::size_t row, std::size_t col) const noexcept {
        return tile(phase_)[(row & 1) * 2 + (col & 1)];
    }

    /// Tile position (row, col) within the 2x2 cell of the given color.
    /// For G, `second` selects the G on the odd tile row.
    std::array<std::size_t, 2> site(Color c, bool second = false) const noexcept;

    std::string_view name() const noexcept;
    /// Case-insensitive "rggb" | "grbg" | "gbrg" | "bggr".
    static std::optional<CfaPattern> parse(std::string_view text);

    friend constexpr bool operator==(CfaPattern, CfaPattern) = default;

private:
    static constexpr std::array<Color, 4> tile(Phase p) noexcept {
        using enum Color;
        switch (p) {
        case Phase::RGGB: return {R, G, G, B};
        case Phase::GRBG: return {G, R, B, G};
        case Phase::GBRG: return {G, B, R, G};
        case Phase::BGGR: return {B, G, G, R};
        }
        return {G, B, R, G};
    }

    Phase phase_ = Phase::GBRG;
};

inline constexpr std::array<CfaPattern, 4> kAllPatterns{
    CfaPattern(CfaPattern::Phase::RGGB), CfaPattern(CfaPattern::Phase::GRBG),
    CfaPattern(CfaPattern::Phase::GBRG), CfaPattern(CfaPattern::Phase::BGGR)};

inline Color color_at(CfaPattern pattern, std::size_t row, std::size_t col) noexcept {
    return pattern.at(row, col);
}

/// Single-sensor reading: one sample per pixel, color given by the pattern.
/// Both dimensions are even.
class MosaicImage {
public:
    MosaicImage() = default;
    /// Throws DimensionError for odd dimensions.
    MosaicImage(CfaPattern pattern, Plane plane);

    CfaPattern pattern() const noexcept { return pattern_; }
    const Plane& plane() const noexcept { return plane_; }
    Plane& plane() noexcept { return plane_; }
    std::size_t width() const noexcept { return plane_.width(); }
    std::size_t height() const noexcept { return plane_.height(); }
    Color color_at(std::size_t row, std::size_t col) const noexcept {
        return pattern_.at(row, col);
    }

    friend bool operator==(const MosaicImage&, const MosaicImage&) = default;

private:
    CfaPattern pattern_;
    Plane plane_;
};

/// Four half-resolution planes of a mosaic. g1 holds the G samples on the
/// even tile row, g2 those on the odd tile row.
struct SubImages {
    Plane r;
    Plane g1;
    Plane g2;
    Plane b;
    CfaPattern pattern;
    std::size_t full_width = 0;
    std::size_t full_height = 0;

    friend bool operator==(const SubImages&, const SubImages&) = default;
};

MosaicImage mosaic_from_rgb(const RgbImage& rgb, CfaPattern pattern);
SubImages decompose(const MosaicImage& mosaic);
/// Throws DimensionError if a sub-plane is not full_width/2 x full_height/2.
MosaicImage recompose(const SubImages& subs);

}  // namespace cfa
