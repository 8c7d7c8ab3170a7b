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
#include <set>

#include "cfa/error.hpp"
#include "cfa/imageio.hpp"
#include "cfa/metrics.hpp"
#include "cfa/pipeline.hpp"
#include "cfa/synthetic.hpp"

using namespace cfa;

namespace {

const auto kWaveletAuto = DenoiserConfig::wavelet(3, std::nullopt);

}  // namespace

TEST_CASE("strategy names") {
    CHECK(parse_strategy("after") == Strategy::After);
    CHECK(parse_strategy("joint") == Strategy::Joint);
    CHECK(parse_strategy("before") == Strategy::Before);
    CHECK_FALSE(parse_strategy("Before").has_value());
}

TEST_CASE("zero noise: After and Before collapse to plain demosaicking") {
    const auto truth = synthetic::natural_image("blobs", 64, 64);
    const NoiseSpec none{0, 0, 0, 1};
    for (const auto& dm : {DemosaickerConfig::bilinear(), DemosaickerConfig::gradient()}) {
        const auto after = run_pipeline(truth, CfaPattern{}, none, Strategy::After, DenoiserConfig::identity(), dm);
        const auto before = run_pipeline(truth, CfaPattern{}, none, Strategy::Before, DenoiserConfig::identity(), dm);
        CHECK(after.output == before.output);
        CHECK(after.output == demosaic(mosaic_from_rgb(truth, CfaPattern{}), dm));
    }
}

TEST_CASE("zero noise ramp through the gradient demosaicker is exact") {
    const auto rec = run_pipeline(synthetic::linear_ramp(32, 32, 0.125, 1.0 / 64), CfaPattern{}, NoiseSpec{}, Strategy::Before,
                                  DenoiserConfig::identity(), DemosaickerConfig::gradient())
                         .record;
    CHECK(std::isinf(rec.cpsnr_db));
    for (double p : rec.psnr_db) CHECK(std::isinf(p));
    CHECK(csv_row(rec).find(",inf,inf,inf,inf,") != std::string::npos);
}

TEST_CASE("Before with wavelet(auto) beats the undenoised baseline") {
    const auto truth = synthetic::natural_image("blobs", 128, 128);
    const auto noise = NoiseSpec::uniform(0.05, 7);
    const double before = run_pipeline(truth, CfaPattern{}, noise, Strategy::Before, kWaveletAuto,
                                       DemosaickerConfig::bilinear())
                              .record.cpsnr_db;
    const double baseline = run_pipeline(truth, CfaPattern{}, noise, Strategy::Before, DenoiserConfig::identity(),
                                         DemosaickerConfig::bilinear())
                                .record.cpsnr_db;
    CHECK(before > baseline);
}

TEST_CASE("record contents") {
    const auto truth = synthetic::natural_image("rings", 32, 32);
    const auto res = run_pipeline(truth, CfaPattern(CfaPattern::Phase::RGGB), NoiseSpec{0.01, 0.02, 0.03, 99},
                                  Strategy::Joint, DenoiserConfig::identity(),
                                  DemosaickerConfig::joint_bilateral(1.0, 0.1), "rings", true);
    const auto& rec = res.record;
    CHECK(rec.image == "rings");
    CHECK(rec.pattern == "rggb");
    CHECK(rec.strategy == "joint");
    CHECK(rec.denoiser == "none");
    CHECK(rec.demosaicker == "joint-bilateral(sigma_s=1;sigma_r=0.1)");
    CHECK(rec.sigma_b == 0.03);
    CHECK(rec.seed == 99);
    CHECK(rec.wall_ms.has_value());
    const auto m = channel_mse(truth, res.output, kMetricCrop);
    CHECK(rec.mse == m);
    CHECK(rec.cpsnr_db == doctest::Approx(cpsnr(truth, res.output, kMetricCrop)));
}

TEST_CASE("inconsistent strategy/demosaicker pairs are rejected") {
    const auto truth = synthetic::natural_image("rings", 16, 16);
    CHECK_THROWS_AS(run_pipeline(truth, CfaPattern{}, NoiseSpec{}, Strategy::Joint, kWaveletAuto,
                                 DemosaickerConfig::bilinear()),
                    ConfigError);
    CHECK_THROWS_AS(run_pipeline(truth, CfaPattern{}, NoiseSpec{}, Strategy::After, kWaveletAuto,
                                 DemosaickerConfig::joint_bilateral(1, 0.1)),
                    ConfigError);
    CHECK_THROWS_AS(run_pipeline(truth, CfaPattern{}, NoiseSpec{}, Strategy::Before, DenoiserConfig::median(0),
                                 DemosaickerConfig::bilinear()),
                    ConfigError);
}

TEST_CASE("seed derivation") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(derive_seed(5, "img", 0) == (5 ^ mix64(fnv1a64("img") ^ mix64(0))));
    std::set<std::uint64_t> seeds;
    for (const char* id : {"a", "b", "c"}) {
        for (std::size_t r = 0; r < 10; ++r) seeds.insert(derive_seed(0, id, r));
    }
    CHECK(seeds.size() == 30);
}

TEST_CASE("grid expansion") {
    ExperimentGrid grid;
    grid.sigmas = {0.02, 0.05, 0.1};
    grid.strategies = {Strategy::After, Strategy::Joint, Strategy::Before};
    grid.denoisers = {kWaveletAuto, DenoiserConfig::median(1)};
    grid.demosaickers = {DemosaickerConfig::bilinear()};
    grid.replicas = 2;
    const auto pts = expand_grid(grid);
    // per sigma: after 2x1x2 + joint 1x2 + before 2x1x2 = 10
    CHECK(pts.size() == 30);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(pts[i].index == i);
    CHECK(pts[0].strategy == Strategy::After);
    CHECK(pts[0].replica == 0);
    CHECK(pts[1].replica == 1);
    CHECK(pts[4].strategy == Strategy::Joint);
    CHECK(pts[4].demosaicker.kind == DemosaickerKind::joint_bilateral);
    CHECK(pts[10].sigma == 0.05);

    ExperimentGrid bad = grid;
    bad.demosaickers = {DemosaickerConfig::joint_bilateral(1, 0.1)};
    CHECK_THROWS_AS(expand_grid(bad), ConfigError);
    bad = grid;
    bad.sigmas.clear();
    CHECK_THROWS_AS(expand_grid(bad), ConfigError);
}

TEST_CASE("run_experiment") {
    const auto corpus = synthetic::default_corpus(32, 32);
    SUBCASE("one image, one point") {
        ExperimentGrid grid;
        const auto recs = run_experiment({corpus[0]}, grid);
        CHECK(recs.size() == 1);
        CHECK(recs[0].image == "blobs");
        CHECK(recs[0].seed == derive_seed(0, "blobs", 0));
    }
    SUBCASE("2 images x 3 sigmas x 3 strategies, image-major and deterministic") {
        ExperimentGrid grid;
        grid.sigmas = {0.01, 0.05, 0.1};
        grid.strategies = {Strategy::After, Strategy::Joint, Strategy::Before};
        grid.denoisers = {DenoiserConfig::wavelet(2, std::nullopt)};
        grid.master_seed = 123;
        const std::vector<CorpusImage> two{corpus[0], corpus[1]};
        const auto serial = run_experiment(two, grid, {1, false});
        CHECK(serial.size() == 18);
        for (std::size_t i = 0; i < 9; ++i) CHECK(serial[i].image == "blobs");
        for (std::size_t i = 9; i < 18; ++i) CHECK(serial[i].image == "stripes");
        CHECK(serial[1].strategy == "joint");
        CHECK(serial[3].sigma_r == 0.05);

        const auto parallel = run_experiment(two, grid, {4, false});
        CHECK(write_csv(serial) == write_csv(parallel));
        CHECK(write_csv(serial) == write_csv(run_experiment(two, grid, {0, false})));
        const std::string csv = write_csv(serial);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 19);
    }
    SUBCASE("failure names the grid point") {
        ExperimentGrid grid;
        grid.denoisers = {DenoiserConfig::wavelet(5, std::nullopt)};  // 32x32 sub-images are 16x16
        CHECK_THROWS_WITH_AS(run_experiment({corpus[2]}, grid, {2, false}),
                             doctest::Contains("image 'rings', grid point 0"), Error);
    }
    SUBCASE("empty corpus") { CHECK_THROWS_AS(run_experiment({}, ExperimentGrid{}), ConfigError); }
}
