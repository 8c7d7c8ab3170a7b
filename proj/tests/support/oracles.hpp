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

// Reference implementations used only by tests. They are written from the
// definitions, independently of the library code paths they check.

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "cfa/bayer.hpp"
#include "cfa/plane.hpp"

namespace cfa::testing {

inline Plane random_plane(std::size_t w, std::size_t h, std::mt19937_64& rng, double lo = 0.0,
                          double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Plane p(w, h);
    for (double& v : p.samples()) v = dist(rng);
    return p;
}

inline RgbImage random_rgb(std::size_t w, std::size_t h, std::mt19937_64& rng) {
    return RgbImage(random_plane(w, h, rng), random_plane(w, h, rng), random_plane(w, h, rng));
}

inline double max_abs_diff(const Plane& a, const Plane& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.samples()[i] - b.samples()[i]));
    return m;
}

inline double max_abs_diff(const RgbImage& a, const RgbImage& b) {
    return std::max({max_abs_diff(a.r, b.r), max_abs_diff(a.g, b.g), max_abs_diff(a.b, b.b)});
}

// Mirror index without the modulo trick: bounce until inside.
inline long mirror(long i, long n) {
    if (n == 1) return 0;
    while (i < 0 || i >= n) {
        if (i < 0) i = -i;
        if (i >= n) i = 2 * (n - 1) - i;
    }
    return i;
}

inline double mirrored(const Plane& p, long r, long c) {
    return p(static_cast<std::size_t>(mirror(r, static_cast<long>(p.height()))),
             static_cast<std::size_t>(mirror(c, static_cast<long>(p.width()))));
}

// Bilinear demosaicking by brute force: a missing sample is the mean of
// every same-color site in the mirrored 3x3 neighbourhood.
inline RgbImage bilinear_oracle(const MosaicImage& m) {
    const long h = static_cast<long>(m.height());
    const long w = static_cast<long>(m.width());
    RgbImage out(m.width(), m.height());
    for (long r = 0; r < h; ++r) {
        for (long c = 0; c < w; ++c) {
            for (int ch = 0; ch < 3; ++ch) {
                const Color want = static_cast<Color>(ch);
                if (m.pattern().at(r, c) == want) {
                    out.channel(ch)(r, c) = m.plane()(r, c);
                    continue;
                }
                double sum = 0.0;
                int n = 0;
                for (long dr = -1; dr <= 1; ++dr) {
                    for (long dc = -1; dc <= 1; ++dc) {
                        const long rr = mirror(r + dr, h);
                        const long cc = mirror(c + dc, w);
                        if (m.pattern().at(rr, cc) == want) {
                            sum += m.plane()(rr, cc);
                            ++n;
                        }
                    }
                }
                out.channel(ch)(r, c) = sum / n;
            }
        }
    }
    return out;
}

// Malvar-He-Cutler kernels in their published x8 integer form, applied by
// direct 5x5 convolution of the raw mosaic.
inline RgbImage gradient_oracle(const MosaicImage& m) {
    using K = double[5][5];
    static const K g_at_rb = {{0, 0, -1, 0, 0}, {0, 0, 2, 0, 0}, {-1, 2, 4, 2, -1},
                              {0, 0, 2, 0, 0}, {0, 0, -1, 0, 0}};
    static const K rb_at_g_row = {{0, 0, 0.5, 0, 0}, {0, -1, 0, -1, 0}, {-1, 4, 5, 4, -1},
                                  {0, -1, 0, -1, 0}, {0, 0, 0.5, 0, 0}};
    static const K rb_at_g_col = {{0, 0, -1, 0, 0}, {0, -1, 4, -1, 0}, {0.5, 0, 5, 0, 0.5},
                                  {0, -1, 4, -1, 0}, {0, 0, -1, 0, 0}};
    static const K rb_at_br = {{0, 0, -1.5, 0, 0}, {0, 2, 0, 2, 0}, {-1.5, 0, 6, 0, -1.5},
                               {0, 2, 0, 2, 0}, {0, 0, -1.5, 0, 0}};
    const long h = static_cast<long>(m.height());
    const long w = static_cast<long>(m.width());
    auto apply = [&](const K& k, long r, long c) {
        double s = 0.0;
        for (long i = -2; i <= 2; ++i) {
            for (long j = -2; j <= 2; ++j) s += k[i + 2][j + 2] * mirrored(m.plane(), r + i, c + j);
        }
        return s / 8.0;
    };
    RgbImage out(m.width(), m.height());
    for (long r = 0; r < h; ++r) {
        for (long c = 0; c < w; ++c) {
            const Color site = m.pattern().at(r, c);
            for (int ch = 0; ch < 3; ++ch) {
                const Color want = static_cast<Color>(ch);
                double v;
                if (site == want) {
                    v = m.plane()(r, c);
                } else if (want == Color::G) {
                    v = apply(g_at_rb, r, c);
                } else if (site == Color::G) {
                    v = m.pattern().at(r, c + 1) == want ? apply(rb_at_g_row, r, c)
                                                         : apply(rb_at_g_col, r, c);
                } else {
                    v = apply(rb_at_br, r, c);
                }
                out.channel(ch)(r, c) = v;
            }
        }
    }
    return out;
}

// Gaussian-weighted mean of same-color sites, the sigma_r -> infinity limit
// of the joint bilateral demosaicker.
inline RgbImage same_color_gaussian_oracle(const MosaicImage& m, double sigma_s) {
    const long rad = std::max(1L, static_cast<long>(std::ceil(3.0 * sigma_s)));
    const long h = static_cast<long>(m.height());
    const long w = static_cast<long>(m.width());
    RgbImage out(m.width(), m.height());
    for (long r = 0; r < h; ++r) {
        for (long c = 0; c < w; ++c) {
            double num[3] = {0, 0, 0};
            double den[3] = {0, 0, 0};
            for (long dr = -rad; dr <= rad; ++dr) {
                for (long dc = -rad; dc <= rad; ++dc) {
                    const long rr = mirror(r + dr, h);
                    const long cc = mirror(c + dc, w);
                    const double wt = std::exp(-(dr * dr + dc * dc) / (2 * sigma_s * sigma_s));
                    const int ch = static_cast<int>(m.pattern().at(rr, cc));
                    num[ch] += wt * m.plane()(rr, cc);
                    den[ch] += wt;
                }
            }
            for (int ch = 0; ch < 3; ++ch) out.channel(ch)(r, c) = num[ch] / den[ch];
        }
    }
    return out;
}

// Plain two-loop MSE.
inline double naive_mse(const Plane& a, const Plane& b) {
    long double s = 0;
    for (std::size_t r = 0; r < a.height(); ++r) {
        for (std::size_t c = 0; c < a.width(); ++c) {
            const long double d = static_cast<long double>(a(r, c)) - b(r, c);
            s += d * d;
        }
    }
    return static_cast<double>(s / static_cast<long double>(a.size()));
}

// Brute-force 2-D bilateral filter.
inline Plane bilateral_oracle(const Plane& p, double sigma_s, double sigma_r) {
    const long rad = std::max(1L, static_cast<long>(std::ceil(3.0 * sigma_s)));
    const long h = static_cast<long>(p.height());
    const long w = static_cast<long>(p.width());
    Plane out(p.width(), p.height());
    for (long r = 0; r < h; ++r) {
        for (long c = 0; c < w; ++c) {
            double num = 0, den = 0;
            for (long dr = -rad; dr <= rad; ++dr) {
                for (long dc = -rad; dc <= rad; ++dc) {
                    const double q = mirrored(p, r + dr, c + dc);
                    const double d = q - p(r, c);
                    const double wt = std::exp(-(dr * dr + dc * dc) / (2 * sigma_s * sigma_s)) *
                                      std::exp(-d * d / (2 * sigma_r * sigma_r));
                    num += wt * q;
                    den += wt;
                }
            }
            out(r, c) = num / den;
        }
    }
    return out;
}

}  // namespace cfa::testing
