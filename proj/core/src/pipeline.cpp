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

#include "cfa/pipeline.hpp"

#include <chrono>

#include "cfa/error.hpp"
#include "cfa/metrics.hpp"

namespace cfa {

std::string_view to_string(Strategy s) {
    switch (s) {
    case Strategy::After: return "after";
    case Strategy::Joint: return "joint";
    case Strategy::Before: return "before";
    }
    return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
    for (auto s : {Strategy::After, Strategy::Joint, Strategy::Before}) {
        if (to_string(s) == text) return s;
    }
    return std::nullopt;
}

void check_consistency(Strategy strategy, const DenoiserConfig& dn, const DemosaickerConfig& dm) {
    const bool joint_dm = dm.kind == DemosaickerKind::joint_bilateral;
    if (strategy == Strategy::Joint && !joint_dm) {
        throw ConfigError("strategy joint requires the joint-bilateral demosaicker");
    }
    if (strategy != Strategy::Joint && joint_dm) {
        throw ConfigError("strategy " + std::string(to_string(strategy)) +
                          " cannot use the joint-bilateral demosaicker");
    }
    if (strategy != Strategy::Joint) dn.validate();
    dm.validate();
}

RgbImage reconstruct(const MosaicImage& noisy, Strategy strategy, const DenoiserConfig& dn,
                     const DemosaickerConfig& dm) {
    check_consistency(strategy, dn, dm);
    switch (strategy) {
    case Strategy::After: {
        RgbImage rgb = demosaic(noisy, dm);
        for (int ch = 0; ch < 3; ++ch) rgb.channel(ch) = denoise(rgb.channel(ch), dn);
        return rgb;
    }
    case Strategy::Joint: return demosaic(noisy, dm);
    case Strategy::Before: {
        const SubImages cleaned = denoise_subimages(decompose(noisy), dn);
        return demosaic(recompose(cleaned), dm);
    }
    }
    throw ConfigError("unknown strategy");
}

PipelineResult run_pipeline(const RgbImage& truth, CfaPattern pattern, const NoiseSpec& noise,
                            Strategy strategy, const DenoiserConfig& dn,
                            const DemosaickerConfig& dm, std::string_view image_id, bool timing) {
    check_consistency(strategy, dn, dm);
    noise.validate();

    const auto start = std::chrono::steady_clock::now();
    const MosaicImage noisy = add_awgn(mosaic_from_rgb(truth, pattern), noise);
    RgbImage output = reconstruct(noisy, strategy, dn, dm);
    const auto stop = std::chrono::steady_clock::now();

    ExperimentRecord rec;
    rec.image = std::string(image_id);
    rec.pattern = std::string(pattern.name());
    rec.strategy = std::string(to_string(strategy));
    rec.denoiser = strategy == Strategy::Joint ? std::string("none") : dn.label();
    rec.demosaicker = dm.label();
    rec.sigma_r = noise.sigma_r;
    rec.sigma_g = noise.sigma_g;
    rec.sigma_b = noise.sigma_b;
    rec.seed = noise.seed;
    rec.mse = channel_mse(truth, output, kMetricCrop);
    for (int ch = 0; ch < 3; ++ch) rec.psnr_db[ch] = psnr(rec.mse[ch]);
    rec.cpsnr_db = psnr((rec.mse[0] + rec.mse[1] + rec.mse[2]) / 3.0);
    if (timing) {
        rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    return {std::move(output), std::move(rec)};
}

}  // namespace cfa
