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

#include "cfa/metrics.hpp"

#include <cmath>
#include <limits>

#include "cfa/error.hpp"

namespace cfa {

double mse(const Plane& a, const Plane& b, std::size_t crop) {
    if (!a.same_shape(b)) throw DimensionError("mse: planes differ in size");
    if (2 * crop >= a.width() || 2 * crop >= a.height()) {
        throw DimensionError("mse: crop leaves no interior");
    }
    double sum = 0.0;
    for (std::size_t r = crop; r < a.height() - crop; ++r) {
        for (std::size_t c = crop; c < a.width() - crop; ++c) {
            const double d = a(r, c) - b(r, c);
            sum += d * d;
        }
    }
    const double n = static_cast<double>((a.height() - 2 * crop) * (a.width() - 2 * crop));
    return sum / n;
}

double psnr(double mse_value, double peak) {
    if (std::isnan(mse_value) || mse_value < 0.0) throw ConfigError("psnr: mse must be >= 0");
    if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / mse_value);
}

std::array<double, 3> channel_mse(const RgbImage& truth, const RgbImage& test, std::size_t crop) {
    return {mse(truth.r, test.r, crop), mse(truth.g, test.g, crop), mse(truth.b, test.b, crop)};
}

double cpsnr(const RgbImage& truth, const RgbImage& test, std::size_t crop) {
    const auto m = channel_mse(truth, test, crop);
    return psnr((m[0] + m[1] + m[2]) / 3.0);
}

}  // namespace cfa
