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
#include <span>
#include <vector>

namespace cfa {

/// Single-channel image of normalized intensities, row-major.
///
/// Samples are nominally in [0,1] but are not clamped: noisy and
/// sharpened intermediates routinely leave that range, and quantization
/// only happens at encode time.
class Plane {
public:
    Plane() = default;
    Plane(std::size_t width, std::size_t height, double fill = 0.0);
    /// Throws DimensionError on a size mismatch and ConfigError on
    /// non-finite samples.
    Plane(std::size_t width, std::size_t height, std::vector<double> samples);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }

    double operator()(std::size_t row, std::size_t col) const noexcept {
        return samples_[row * width_ + col];
    }
    double& operator()(std::size_t row, std::size_t col) noexcept {
        return samples_[row * width_ + col];
    }

    /// Mirror-reflected read (reflect-101: the edge sample is not repeated).
    double reflected(std::ptrdiff_t row, std::ptrdiff_t col) const noexcept;

    std::span<const double> samples() const noexcept { return samples_; }
    std::span<double> samples() noexcept { return samples_; }

    bool same_shape(const Plane& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }

    /// Copy of the rectangle [row0, row0+h) x [col0, col0+w).
    Plane crop(std::size_t row0, std::size_t col0, std::size_t w, std::size_t h) const;

    friend bool operator==(const Plane&, const Plane&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<double> samples_;
};

/// Reflect-101 index into [0, n). Works for any offset, including ones
/// larger than the extent.
std::ptrdiff_t reflect_index(std::ptrdiff_t i, std::ptrdiff_t n) noexcept;

/// Three co-registered channels.
struct RgbImage {
    Plane r;
    Plane g;
    Plane b;

    RgbImage() = default;
    /// Throws DimensionError unless all three planes share a shape.
    RgbImage(Plane r, Plane g, Plane b);
    RgbImage(std::size_t width, std::size_t height, double fill = 0.0);

    std::size_t width() const noexcept { return r.width(); }
    std::size_t height() const noexcept { return r.height(); }

    const Plane& channel(int c) const noexcept { return c == 0 ? r : (c == 1 ? g : b); }
    Plane& channel(int c) noexcept { return c == 0 ? r : (c == 1 ? g : b); }

    friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

}  // namespace cfa
