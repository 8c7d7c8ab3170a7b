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

#include <doctest.h>

#include <cmath>
#include <random>

#include "cfa/error.hpp"
#include "cfa/metrics.hpp"
#include "support/oracles.hpp"

using namespace cfa;

TEST_CASE("mse") {
    const Plane a(8, 8, 0.3);
    CHECK(mse(a, a) == 0.0);
    CHECK(mse(a, Plane(8, 8, 0.4)) == doctest::Approx(0.01).epsilon(1e-12));

    std::mt19937_64 rng(1);
    const Plane x = testing::random_plane(33, 17, rng);
    const Plane y = testing::random_plane(33, 17, rng);
    const double oracle = testing::naive_mse(x, y);
    CHECK(std::abs(mse(x, y) - oracle) / oracle < 1e-12);

    Plane z = a;
    z(0, 0) = 1.0;  // border sample, cropped away
    CHECK(mse(a, z, 1) == 0.0);
    CHECK(mse(a, z) > 0.0);

    CHECK_THROWS_AS(mse(a, Plane(8, 7)), DimensionError);
    CHECK_THROWS_AS(mse(a, a, 4), DimensionError);
}

TEST_CASE("psnr") {
    CHECK(psnr(0.01) == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(psnr(1e-4) == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(std::isinf(psnr(0.0)));
    CHECK(psnr(0.01, 2.0) == doctest::Approx(10 * std::log10(400.0)));
    CHECK_THROWS_AS(psnr(-1.0), ConfigError);
}

TEST_CASE("cpsnr") {
    const RgbImage truth(8, 8, 0.5);
    CHECK(std::isinf(cpsnr(truth, truth)));

    RgbImage off = truth;
    for (double& v : off.r.samples()) v += 0.1;
    CHECK(cpsnr(truth, off) == doctest::Approx(10 * std::log10(3 / 0.01)).epsilon(1e-12));
    CHECK(cpsnr(truth, off) == doctest::Approx(24.77).epsilon(1e-3));

    std::mt19937_64 rng(2);
    const RgbImage a = testing::random_rgb(16, 16, rng);
    const RgbImage b = testing::random_rgb(16, 16, rng);
    const double m = (testing::naive_mse(a.r, b.r) + testing::naive_mse(a.g, b.g) + testing::naive_mse(a.b, b.b)) / 3;
    CHECK(std::abs(cpsnr(a, b) - 10 * std::log10(1 / m)) < 1e-9);
}
