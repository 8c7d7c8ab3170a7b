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

#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "cfa/error.hpp"
#include "cfa/pipeline.hpp"

namespace cfa {

std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view image_id,
                          std::size_t replica) noexcept {
    return master ^ mix64(fnv1a64(image_id) ^ mix64(static_cast<std::uint64_t>(replica)));
}

std::vector<GridPoint> expand_grid(const ExperimentGrid& grid) {
    if (grid.patterns.empty() || grid.sigmas.empty() || grid.strategies.empty() ||
        grid.replicas == 0) {
        throw ConfigError("experiment grid is empty");
    }
    std::vector<GridPoint> points;
    auto push = [&](CfaPattern p, double sigma, Strategy s, const DenoiserConfig& dn,
                    const DemosaickerConfig& dm) {
        check_consistency(s, dn, dm);
        for (std::size_t rep = 0; rep < grid.replicas; ++rep) {
            points.push_back({points.size(), p, sigma, s, dn, dm, rep});
        }
    };
    for (auto pattern : grid.patterns) {
        for (double sigma : grid.sigmas) {
            for (auto strategy : grid.strategies) {
                if (strategy == Strategy::Joint) {
                    push(pattern, sigma, strategy, DenoiserConfig::identity(), grid.joint);
                    continue;
                }
                if (grid.denoisers.empty() || grid.demosaickers.empty()) {
                    throw ConfigError("experiment grid has no denoiser or demosaicker");
                }
                for (const auto& dn : grid.denoisers) {
                    for (const auto& dm : grid.demosaickers) push(pattern, sigma, strategy, dn, dm);
                }
            }
        }
    }
    return points;
}

std::vector<ExperimentRecord> run_experiment(const std::vector<CorpusImage>& corpus,
                                             const ExperimentGrid& grid,
                                             const ExperimentOptions& options) {
    if (corpus.empty()) throw ConfigError("experiment corpus is empty");
    const auto points = expand_grid(grid);
    const std::size_t total = corpus.size() * points.size();
    std::vector<ExperimentRecord> records(total);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::size_t error_job = total;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t job = next.fetch_add(1);
            if (job >= total || failed.load()) return;
            const auto& image = corpus[job / points.size()];
            const auto& pt = points[job % points.size()];
            try {
                const NoiseSpec noise =
                    NoiseSpec::uniform(pt.sigma, derive_seed(grid.master_seed, image.id, pt.replica));
                records[job] = run_pipeline(image.rgb, pt.pattern, noise, pt.strategy, pt.denoiser,
                                            pt.demosaicker, image.id, options.timing)
                                   .record;
            } catch (const std::exception& e) {
                std::lock_guard lock(error_mutex);
                if (job < error_job) {
                    error_job = job;
                    error = std::make_exception_ptr(
                        Error("experiment failed at image '" + image.id + "', grid point " +
                              std::to_string(pt.index) + ": " + e.what()));
                }
                failed = true;
                return;
            }
        }
    };

    unsigned jobs = options.jobs == 0 ? std::thread::hardware_concurrency() : options.jobs;
    if (jobs == 0) jobs = 1;
    if (jobs > total) jobs = static_cast<unsigned>(total);
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    return records;
}

}  // namespace cfa
