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

#include "cfa/plane.hpp"

namespace cfa {

/// Mean of (a-b)^2 over the interior left after dropping `crop` pixels
/// on every side. Throws DimensionError on shape mismatch or when the
/// crop leaves nothing.
double mse(const Plane& a, const Plane& b, std::size_t crop = 0);

/// 10 log10(peak^2 / mse); +infinity when mse == 0. Throws ConfigError
/// for negative or NaN mse.
double psnr(double mse_value, double peak = 1.0);

std::array<double, 3> channel_mse(const RgbImage& truth, const RgbImage& test,
                                  std::size_t crop = 0);

/// PSNR of the mean of the three channel MSEs.
double cpsnr(const RgbImage& truth, const RgbImage& test, std::size_t crop = 0);

}  // namespace cfa
