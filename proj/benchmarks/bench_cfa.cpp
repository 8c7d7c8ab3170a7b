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

#include <benchmark/benchmark.h>

#include "cfa/bayer.hpp"
#include "cfa/demosaic.hpp"
#include "cfa/denoise.hpp"
#include "cfa/noise.hpp"
#include "cfa/pipeline.hpp"
#include "cfa/synthetic.hpp"

namespace {

cfa::MosaicImage noisy_mosaic(std::size_t n) {
    const auto truth = cfa::synthetic::natural_image("blobs", n, n);
    return cfa::add_awgn(cfa::mosaic_from_rgb(truth, cfa::CfaPattern{}), cfa::NoiseSpec::uniform(0.05, 1));
}

void BM_Demosaic(benchmark::State& state, cfa::DemosaickerConfig cfg) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = noisy_mosaic(n);
    for (auto _ : state) benchmark::DoNotOptimize(cfa::demosaic(m, cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}
BENCHMARK_CAPTURE(BM_Demosaic, bilinear, cfa::DemosaickerConfig::bilinear())->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(BM_Demosaic, gradient, cfa::DemosaickerConfig::gradient())->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(BM_Demosaic, joint_bilateral, cfa::DemosaickerConfig::joint_bilateral(1.0, 0.1))->Arg(256);

void BM_Denoise(benchmark::State& state, cfa::DenoiserConfig cfg) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto subs = cfa::decompose(noisy_mosaic(n));
    for (auto _ : state) benchmark::DoNotOptimize(cfa::denoise_subimages(subs, cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}
BENCHMARK_CAPTURE(BM_Denoise, gaussian, cfa::DenoiserConfig::gaussian(1.0))->Arg(512);
BENCHMARK_CAPTURE(BM_Denoise, median, cfa::DenoiserConfig::median(1))->Arg(512);
BENCHMARK_CAPTURE(BM_Denoise, bilateral, cfa::DenoiserConfig::bilateral(1.0, 0.1))->Arg(512);
BENCHMARK_CAPTURE(BM_Denoise, wavelet_auto, cfa::DenoiserConfig::wavelet(3, std::nullopt))->Arg(512);

void BM_Pipeline(benchmark::State& state, cfa::Strategy strategy) {
    const auto truth = cfa::synthetic::natural_image("rings", 256, 256);
    const auto dn = cfa::DenoiserConfig::wavelet(3, std::nullopt);
    const auto dm = strategy == cfa::Strategy::Joint ? cfa::DemosaickerConfig::joint_bilateral(1.0, 0.1)
                                                     : cfa::DemosaickerConfig::bilinear();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            cfa::run_pipeline(truth, cfa::CfaPattern{}, cfa::NoiseSpec::uniform(0.05, 3), strategy, dn, dm));
    }
}
BENCHMARK_CAPTURE(BM_Pipeline, after, cfa::Strategy::After);
BENCHMARK_CAPTURE(BM_Pipeline, joint, cfa::Strategy::Joint);
BENCHMARK_CAPTURE(BM_Pipeline, before, cfa::Strategy::Before);

}  // namespace

BENCHMARK_MAIN();
