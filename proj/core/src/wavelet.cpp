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

#include "cfa/wavelet.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cfa/error.hpp"

namespace cfa {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

struct Bands {
    Plane ll, lh, hl, hh;
};

// One analysis step. Rows first (horizontal low/high), then columns.
Bands analyze(const Plane& in) {
    const std::size_t hw = in.width() / 2;
    const std::size_t hh = in.height() / 2;
    Plane lo(hw, in.height());
    Plane hi(hw, in.height());
    for (std::size_t r = 0; r < in.height(); ++r) {
        for (std::size_t c = 0; c < hw; ++c) {
            const double a = in(r, 2 * c);
            const double b = in(r, 2 * c + 1);
            lo(r, c) = (a + b) * kInvSqrt2;
            hi(r, c) = (a - b) * kInvSqrt2;
        }
    }
    Bands out{Plane(hw, hh), Plane(hw, hh), Plane(hw, hh), Plane(hw, hh)};
    for (std::size_t r = 0; r < hh; ++r) {
        for (std::size_t c = 0; c < hw; ++c) {
            out.ll(r, c) = (lo(2 * r, c) + lo(2 * r + 1, c)) * kInvSqrt2;
            out.lh(r, c) = (lo(2 * r, c) - lo(2 * r + 1, c)) * kInvSqrt2;
            out.hl(r, c) = (hi(2 * r, c) + hi(2 * r + 1, c)) * kInvSqrt2;
            out.hh(r, c) = (hi(2 * r, c) - hi(2 * r + 1, c)) * kInvSqrt2;
        }
    }
    return out;
}

Plane synthesize(const Plane& ll, const WaveletLevel& d) {
    const std::size_t hw = ll.width();
    const std::size_t hh = ll.height();
    for (const Plane* p : {&d.lh, &d.hl, &d.hh}) {
        if (p->width() != hw || p->height() != hh) {
            throw DimensionError("wavelet band shapes are inconsistent");
        }
    }
    Plane lo(hw, 2 * hh);
    Plane hi(hw, 2 * hh);
    for (std::size_t r = 0; r < hh; ++r) {
        for (std::size_t c = 0; c < hw; ++c) {
            lo(2 * r, c) = (ll(r, c) + d.lh(r, c)) * kInvSqrt2;
            lo(2 * r + 1, c) = (ll(r, c) - d.lh(r, c)) * kInvSqrt2;
            hi(2 * r, c) = (d.hl(r, c) + d.hh(r, c)) * kInvSqrt2;
            hi(2 * r + 1, c) = (d.hl(r, c) - d.hh(r, c)) * kInvSqrt2;
        }
    }
    Plane out(2 * hw, 2 * hh);
    for (std::size_t r = 0; r < 2 * hh; ++r) {
        for (std::size_t c = 0; c < hw; ++c) {
            out(r, 2 * c) = (lo(r, c) + hi(r, c)) * kInvSqrt2;
            out(r, 2 * c + 1) = (lo(r, c) - hi(r, c)) * kInvSqrt2;
        }
    }
    return out;
}

double sum_squares(const Plane& p) noexcept {
    double s = 0.0;
    for (double v : p.samples()) s += v * v;
    return s;
}

}  // namespace

std::size_t WaveletPyramid::coefficient_count() const noexcept {
    std::size_t n = approx.size();
    for (const auto& d : details) n += d.lh.size() + d.hl.size() + d.hh.size();
    return n;
}

double WaveletPyramid::energy() const noexcept {
    double e = sum_squares(approx);
    for (const auto& d : details) e += sum_squares(d.lh) + sum_squares(d.hl) + sum_squares(d.hh);
    return e;
}

WaveletPyramid dwt_haar(const Plane& plane, std::size_t levels) {
    if (levels == 0) throw ConfigError("wavelet levels must be >= 1");
    if (levels >= 8 * sizeof(std::size_t)) throw ConfigError("wavelet levels out of range");
    const std::size_t block = std::size_t{1} << levels;
    if (plane.empty() || plane.width() % block != 0 || plane.height() % block != 0) {
        throw DimensionError("plane " + std::to_string(plane.width()) + "x" +
                             std::to_string(plane.height()) + " is not divisible by 2^" +
                             std::to_string(levels));
    }
    WaveletPyramid pyr;
    pyr.details.reserve(levels);
    Plane current = plane;
    for (std::size_t l = 0; l < levels; ++l) {
        Bands b = analyze(current);
        pyr.details.push_back({std::move(b.lh), std::move(b.hl), std::move(b.hh)});
        current = std::move(b.ll);
    }
    pyr.approx = std::move(current);
    return pyr;
}

Plane idwt_haar(const WaveletPyramid& pyr) {
    Plane current = pyr.approx;
    for (auto it = pyr.details.rbegin(); it != pyr.details.rend(); ++it) {
        current = synthesize(current, *it);
    }
    return current;
}

}  // namespace cfa
