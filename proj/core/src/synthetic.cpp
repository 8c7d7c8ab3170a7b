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

#include "cfa/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cfa/error.hpp"

namespace cfa::synthetic {

namespace {

constexpr double kPi = std::numbers::pi;

double smoothstep(double e0, double e1, double x) {
    const double t = std::clamp((x - e0) / (e1 - e0), 0.0, 1.0);
    return t * t * (3.0 - 2.0 * t);
}

// Luminance with a gentle tint per channel; keeps channels strongly
// correlated, as in photographs.
template <typename F>
RgbImage shade(std::size_t w, std::size_t h, F&& f) {
    RgbImage img(w, h);
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) {
            const double y = static_cast<double>(r) / static_cast<double>(h);
            const double x = static_cast<double>(c) / static_cast<double>(w);
            const std::array<double, 3> rgb = f(x, y);
            for (int ch = 0; ch < 3; ++ch) img.channel(ch)(r, c) = std::clamp(rgb[ch], 0.02, 0.98);
        }
    }
    return img;
}

RgbImage blobs(std::size_t w, std::size_t h) {
    struct Blob {
        double cx, cy, rx, ry, softness;
        std::array<double, 3> color;
    };
    static constexpr std::array<Blob, 5> kBlobs{{
        {0.30, 0.35, 0.18, 0.12, 0.02, {0.85, 0.55, 0.35}},
        {0.70, 0.30, 0.14, 0.20, 0.08, {0.35, 0.60, 0.80}},
        {0.50, 0.72, 0.25, 0.10, 0.01, {0.55, 0.75, 0.40}},
        {0.20, 0.80, 0.08, 0.08, 0.005, {0.90, 0.85, 0.70}},
        {0.82, 0.78, 0.10, 0.15, 0.04, {0.30, 0.25, 0.45}},
    }};
    return shade(w, h, [](double x, double y) {
        std::array<double, 3> v{0.35 + 0.25 * x, 0.40 + 0.2 * x, 0.45 + 0.1 * y};
        for (const auto& b : kBlobs) {
            const double d = std::hypot((x - b.cx) / b.rx, (y - b.cy) / b.ry);
            const double a = 1.0 - smoothstep(1.0 - b.softness / b.rx, 1.0 + b.softness / b.rx, d);
            for (int ch = 0; ch < 3; ++ch) v[ch] = (1.0 - a) * v[ch] + a * b.color[ch];
        }
        // Hard-edged bar across the lower left.
        if (x > 0.05 && x < 0.45 && y > 0.55 && y < 0.60) v = {0.15, 0.18, 0.22};
        return v;
    });
}

RgbImage stripes(std::size_t w, std::size_t h) {
    const double period = 14.0 / static_cast<double>(std::max(w, h));
    return shade(w, h, [period](double x, double y) {
        const double u = (0.8 * x + 0.6 * y) / period;
        const double envelope = 0.5 + 0.5 * std::sin(kPi * y);
        const double l = 0.5 + 0.22 * envelope * std::sin(2.0 * kPi * u);
        const double tint = 0.08 * std::cos(2.0 * kPi * x);
        std::array<double, 3> v{l + tint, l, l - tint};
        if (x > 0.6 && y < 0.4) {
            const double k = 0.3 + 0.2 * x;
            v = {k + 0.1, k + 0.05, k};
        }
        return v;
    });
}

RgbImage rings(std::size_t w, std::size_t h) {
    return shade(w, h, [](double x, double y) {
        const double d = std::hypot(x - 0.45, y - 0.5);
        // Ring period shrinks slowly with radius (about 20 px down to 10 px
        // at 128 px image size).
        const double phase = 2.0 * kPi * (6.0 * d + 4.0 * d * d);
        const double l = 0.5 + 0.25 * std::cos(phase) * std::exp(-2.0 * d);
        return std::array<double, 3>{l * 1.05 + 0.05 * x, l, l * 0.9 + 0.08 * y};
    });
}

}  // namespace

RgbImage linear_ramp(std::size_t width, std::size_t height, double start, double slope) {
    RgbImage img(width, height);
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            const double v = start + slope * static_cast<double>(c);
            img.r(r, c) = img.g(r, c) = img.b(r, c) = v;
        }
    }
    return img;
}

Plane radial_gradient(std::size_t width, std::size_t height) {
    Plane p(width, height);
    const double cx = 0.5 * static_cast<double>(width - 1);
    const double cy = 0.5 * static_cast<double>(height - 1);
    const double dmax = std::hypot(cx, cy);
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            const double d = std::hypot(static_cast<double>(c) - cx, static_cast<double>(r) - cy) / dmax;
            p(r, c) = 0.2 + 0.6 * (1.0 - d * d);
        }
    }
    return p;
}

RgbImage step_edge(std::size_t width, std::size_t height, std::size_t edge_col, double low,
                   double high) {
    RgbImage img(width, height);
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            const double v = c < edge_col ? low : high;
            img.r(r, c) = img.g(r, c) = img.b(r, c) = v;
        }
    }
    return img;
}

const std::vector<std::string>& natural_image_names() {
    static const std::vector<std::string> names{"blobs", "stripes", "rings"};
    return names;
}

RgbImage natural_image(const std::string& name, std::size_t width, std::size_t height) {
    if (name == "blobs") return blobs(width, height);
    if (name == "stripes") return stripes(width, height);
    if (name == "rings") return rings(width, height);
    throw ConfigError("unknown synthetic image '" + name + "'");
}

std::vector<CorpusImage> default_corpus(std::size_t width, std::size_t height) {
    std::vector<CorpusImage> corpus;
    for (const auto& name : natural_image_names()) {
        corpus.push_back({name, natural_image(name, width, height)});
    }
    return corpus;
}

}  // namespace cfa::synthetic
