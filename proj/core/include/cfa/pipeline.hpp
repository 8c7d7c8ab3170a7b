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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfa/bayer.hpp"
#include "cfa/demosaic.hpp"
#include "cfa/denoise.hpp"
#include "cfa/noise.hpp"
#include "cfa/plane.hpp"

namespace cfa {

/// Where denoising sits relative to demosaicking.
///  - After:  mosaic -> noise -> demosaic -> denoise each RGB channel
///  - Joint:  mosaic -> noise -> joint bilateral demosaick-denoise
///  - Before: mosaic -> noise -> split into R/G1/G2/B -> denoise each
///            -> reassemble -> demosaic
enum class Strategy { After, Joint, Before };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view text);

/// Border excluded from every reported metric.
inline constexpr std::size_t kMetricCrop = 4;

struct ExperimentRecord {
    std::string image;
    std::string pattern;
    std::string strategy;
    std::string denoiser;
    std::string demosaicker;
    double sigma_r = 0.0;
    double sigma_g = 0.0;
    double sigma_b = 0.0;
    std::uint64_t seed = 0;
    std::array<double, 3> mse{};
    std::array<double, 3> psnr_db{};
    double cpsnr_db = 0.0;
    /// Empty when timing is disabled; written as "na".
    std::optional<double> wall_ms;
};

/// Throws ConfigError if the pairing of strategy and configs is invalid:
/// Joint requires the joint_bilateral demosaicker, After and Before forbid it.
void check_consistency(Strategy strategy, const DenoiserConfig& dn, const DemosaickerConfig& dm);

/// The reconstruction alone, without metrics.
RgbImage reconstruct(const MosaicImage& noisy, Strategy strategy, const DenoiserConfig& dn,
                     const DemosaickerConfig& dm);

struct PipelineResult {
    RgbImage output;
    ExperimentRecord record;
};

PipelineResult run_pipeline(const RgbImage& truth, CfaPattern pattern, const NoiseSpec& noise,
                            Strategy strategy, const DenoiserConfig& dn,
                            const DemosaickerConfig& dm, std::string_view image_id = "image",
                            bool timing = false);

struct CorpusImage {
    std::string id;
    RgbImage rgb;
};

/// Sweep definition. Points are enumerated, per image, in the nested order
/// pattern, sigma, strategy, denoiser, demosaicker, replica (replica
/// fastest). Joint points use `joint` and record the denoiser as "none";
/// After/Before points iterate `denoisers` x `demosaickers`.
struct ExperimentGrid {
    std::vector<CfaPattern> patterns{CfaPattern{}};
    std::vector<double> sigmas{0.05};
    std::vector<Strategy> strategies{Strategy::Before};
    std::vector<DenoiserConfig> denoisers{DenoiserConfig{}};
    std::vector<DemosaickerConfig> demosaickers{DemosaickerConfig{}};
    DemosaickerConfig joint = DemosaickerConfig::joint_bilateral(1.0, 0.1);
    std::size_t replicas = 1;
    std::uint64_t master_seed = 0;
};

struct GridPoint {
    std::size_t index = 0;
    CfaPattern pattern;
    double sigma = 0.0;
    Strategy strategy = Strategy::Before;
    DenoiserConfig denoiser;
    DemosaickerConfig demosaicker;
    std::size_t replica = 0;
};

std::vector<GridPoint> expand_grid(const ExperimentGrid& grid);

/// Noise seed of one run:
///   master ^ mix64(fnv1a64(image_id) ^ mix64(replica))
/// Points that differ only in strategy, sigma or configs share a noise
/// realization, so comparisons between them are paired.
std::uint64_t derive_seed(std::uint64_t master, std::string_view image_id, std::size_t replica) noexcept;

std::uint64_t fnv1a64(std::string_view text) noexcept;

struct ExperimentOptions {
    /// Worker threads; 0 means hardware concurrency.
    unsigned jobs = 1;
    bool timing = false;
};

/// One record per (image, grid point), image-major, in grid order. The
/// result does not depend on `jobs`. A failing point is rethrown as
/// Error naming the image and point index.
std::vector<ExperimentRecord> run_experiment(const std::vector<CorpusImage>& corpus,
                                             const ExperimentGrid& grid,
                                             const ExperimentOptions& options = {});

}  // namespace cfa
