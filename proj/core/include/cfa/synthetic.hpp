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

// Deterministic test content.

#include <cstddef>
#include <string>
#include <vector>

#include "cfa/pipeline.hpp"
#include "cfa/plane.hpp"

namespace cfa::synthetic {

/// Gray image whose intensity rises linearly with the column index.
RgbImage linear_ramp(std::size_t width, std::size_t height, double start = 0.1,
                     double slope = 0.02);

/// Smooth radial gradient, bright at the centre.
Plane radial_gradient(std::size_t width, std::size_t height);

/// Vertical step from `low` to `high` at column `edge_col`.
RgbImage step_edge(std::size_t width, std::size_t height, std::size_t edge_col,
                   double low = 0.2, double high = 0.8);

/// Names accepted by natural_image().
const std::vector<std::string>& natural_image_names();

/// Scenes with correlated channels, soft and hard edges, and mid-frequency
/// texture: "blobs", "stripes", "rings".
RgbImage natural_image(const std::string& name, std::size_t width, std::size_t height);

std::vector<CorpusImage> default_corpus(std::size_t width = 128, std::size_t height = 128);

}  // namespace cfa::synthetic
