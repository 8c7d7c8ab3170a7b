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

#include "cfa/plane.hpp"

#include <cmath>
#include <string>

#include "cfa/error.hpp"

namespace cfa {

Plane::Plane(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height), samples_(width * height, fill) {}

Plane::Plane(std::size_t width, std::size_t height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
    if (samples_.size() != width_ * height_) {
        throw DimensionError("plane " + std::to_string(width_) + "x" + std::to_string(height_) +
                             " given " + std::to_string(samples_.size()) + " samples");
    }
    for (double v : samples_) {
        if (!std::isfinite(v)) throw ConfigError("plane sample is not finite");
    }
}

std::ptrdiff_t reflect_index(std::ptrdiff_t i, std::ptrdiff_t n) noexcept {
    if (n <= 1) return 0;
    const std::ptrdiff_t period = 2 * (n - 1);
    i %= period;
    if (i < 0) i += period;
    return i < n ? i : period - i;
}

double Plane::reflected(std::ptrdiff_t row, std::ptrdiff_t col) const noexcept {
    const auto r = reflect_index(row, static_cast<std::ptrdiff_t>(height_));
    const auto c = reflect_index(col, static_cast<std::ptrdiff_t>(width_));
    return samples_[static_cast<std::size_t>(r) * width_ + static_cast<std::size_t>(c)];
}

Plane Plane::crop(std::size_t row0, std::size_t col0, std::size_t w, std::size_t h) const {
    if (row0 + h > height_ || col0 + w > width_) {
        throw DimensionError("crop rectangle exceeds plane");
    }
    Plane out(w, h);
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) out(r, c) = (*this)(row0 + r, col0 + c);
    }
    return out;
}

RgbImage::RgbImage(Plane r_, Plane g_, Plane b_)
    : r(std::move(r_)), g(std::move(g_)), b(std::move(b_)) {
    if (!r.same_shape(g) || !r.same_shape(b)) {
        throw DimensionError("RGB planes differ in size");
    }
}

RgbImage::RgbImage(std::size_t width, std::size_t height, double fill)
    : r(width, height, fill), g(width, height, fill), b(width, height, fill) {}

}  // namespace cfa
