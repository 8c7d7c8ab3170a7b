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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cfa/bayer.hpp"
#include "cfa/demosaic.hpp"
#include "cfa/denoise.hpp"
#include "cfa/error.hpp"
#include "cfa/imageio.hpp"
#include "cfa/noise.hpp"
#include "cfa/pipeline.hpp"
#include "cfa/synthetic.hpp"

namespace cfa::cli {

namespace {

namespace fs = std::filesystem;

// Bad flag value detected after CLI11 parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

double parse_real(const std::string& text, const char* flag) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw UsageError(std::string(flag) + ": '" + text + "' is not a number");
    }
    return v;
}

CfaPattern parse_pattern(const std::string& text) {
    if (auto p = CfaPattern::parse(text)) return *p;
    throw UsageError("--pattern: '" + text + "' is not one of rggb, grbg, gbrg, bggr");
}

struct NoiseFlags {
    std::optional<double> sigma;
    std::optional<double> sigma_r, sigma_g, sigma_b;
    std::uint64_t seed = 0;

    void attach(CLI::App& app) {
        app.add_option("--sigma", sigma, "Noise std for all three color classes (normalized units)");
        app.add_option("--sigma-r", sigma_r, "Noise std at R sites (overrides --sigma)");
        app.add_option("--sigma-g", sigma_g, "Noise std at G sites (overrides --sigma)");
        app.add_option("--sigma-b", sigma_b, "Noise std at B sites (overrides --sigma)");
        app.add_option("--seed", seed, "Noise seed")->capture_default_str();
    }

    NoiseSpec spec() const {
        const double base = sigma.value_or(0.0);
        NoiseSpec s{sigma_r.value_or(base), sigma_g.value_or(base), sigma_b.value_or(base), seed};
        try {
            s.validate();
        } catch (const ConfigError& e) {
            throw UsageError(std::string("--sigma: ") + e.what());
        }
        return s;
    }
};

struct DenoiserFlags {
    std::string kinds = "wavelet";
    double sigma_s = 1.0;
    int radius = 1;
    double sigma_r = 0.1;
    int levels = 3;
    std::string sigma_n = "auto";

    void attach(CLI::App& app, bool allow_list) {
        app.add_option("--denoiser", kinds,
                       allow_list ? "Denoiser kinds, comma-separated: gaussian,median,bilateral,wavelet"
                                  : "Denoiser: gaussian|median|bilateral|wavelet")
            ->capture_default_str();
        app.add_option("--dn-sigma-s", sigma_s, "Spatial sigma of gaussian/bilateral (pixels)")
            ->capture_default_str();
        app.add_option("--dn-radius", radius, "Median window radius (pixels)")->capture_default_str();
        app.add_option("--dn-sigma-r", sigma_r, "Range sigma of bilateral (intensity)")
            ->capture_default_str();
        app.add_option("--dn-levels", levels, "Wavelet decomposition levels")->capture_default_str();
        app.add_option("--dn-sigma-n", sigma_n, "Wavelet noise level: number or 'auto'")
            ->capture_default_str();
    }

    DenoiserConfig make(const std::string& kind_name) const {
        const auto kind = parse_denoiser_kind(kind_name);
        if (!kind) throw UsageError("--denoiser: unknown denoiser '" + kind_name + "'");
        DenoiserConfig cfg;
        cfg.kind = *kind;
        cfg.sigma_s = sigma_s;
        cfg.radius = radius;
        cfg.sigma_r = sigma_r;
        cfg.levels = levels;
        if (sigma_n != "auto") cfg.sigma_n = parse_real(sigma_n, "--dn-sigma-n");
        try {
            cfg.validate();
        } catch (const ConfigError& e) {
            throw UsageError(std::string("--denoiser: ") + e.what());
        }
        return cfg;
    }

    std::vector<DenoiserConfig> make_all() const {
        std::vector<DenoiserConfig> out;
        for (const auto& k : split_list(kinds)) out.push_back(make(k));
        if (out.empty()) throw UsageError("--denoiser: no denoiser given");
        return out;
    }
};

struct DemosaickerFlags {
    std::string kinds = "bilinear";
    double sigma_s = 1.0;
    double sigma_r = 0.1;

    void attach(CLI::App& app, bool allow_list) {
        app.add_option("--demosaicker", kinds,
                       allow_list ? "Demosaickers, comma-separated: bilinear,gradient,joint-bilateral"
                                  : "Demosaicker: bilinear|gradient|joint-bilateral")
            ->capture_default_str();
        app.add_option("--jb-sigma-s", sigma_s, "Joint bilateral spatial sigma (pixels)")
            ->capture_default_str();
        app.add_option("--jb-sigma-r", sigma_r, "Joint bilateral range sigma (intensity)")
            ->capture_default_str();
    }

    DemosaickerConfig make(const std::string& kind_name) const {
        const auto kind = parse_demosaicker_kind(kind_name);
        if (!kind) throw UsageError("--demosaicker: unknown demosaicker '" + kind_name + "'");
        DemosaickerConfig cfg{*kind, sigma_s, sigma_r};
        try {
            cfg.validate();
        } catch (const ConfigError& e) {
            throw UsageError(std::string("--demosaicker: ") + e.what());
        }
        return cfg;
    }
};

Strategy parse_strategy_flag(const std::string& text) {
    if (auto s = parse_strategy(text)) return *s;
    throw UsageError("--strategy: '" + text + "' is not one of after, joint, before");
}

void check_bit_depth(int depth) {
    if (depth != 8 && depth != 16) throw UsageError("--bit-depth: must be 8 or 16");
}

MosaicImage load_mosaic(const fs::path& path, CfaPattern pattern) {
    return MosaicImage(pattern, read_pgm(path));
}

void emit(std::ostream& out, const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << text;
    if (!f) throw IoError("error writing " + path);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bayer CFA denoising strategies: simulate, denoise, demosaic, compare"};
    app.name("cfaisp");
    app.require_subcommand(1, 1);
    // --help lists every subcommand together with its flags.
    app.set_help_flag();
    app.set_help_all_flag("-h,--help", "Print help for all subcommands and flags");

    // mosaic ------------------------------------------------------------
    std::string in_path;
    std::string out_path;
    std::string pattern_text = "gbrg";
    int bit_depth = 8;

    auto add_io = [&](CLI::App* sub, bool out_required = true) {
        sub->add_option("--in", in_path, "Input image (PGM/PPM)")->required();
        auto* o = sub->add_option("--out", out_path, "Output path");
        if (out_required) o->required();
    };
    auto add_pattern = [&](CLI::App* sub, const char* help = "Bayer phase: rggb|grbg|gbrg|bggr") {
        sub->add_option("--pattern", pattern_text, help)->capture_default_str();
    };
    auto add_depth = [&](CLI::App* sub) {
        sub->add_option("--bit-depth", bit_depth, "Output sample depth: 8 or 16")->capture_default_str();
    };

    auto* mosaic_cmd = app.add_subcommand("mosaic", "Sample an RGB PPM through the Bayer CFA into a PGM mosaic");
    add_io(mosaic_cmd);
    add_pattern(mosaic_cmd);
    add_depth(mosaic_cmd);

    // noise -------------------------------------------------------------
    NoiseFlags noise_flags;
    auto* noise_cmd = app.add_subcommand("noise", "Add per-color Gaussian noise to a PGM mosaic (clipped only when written)");
    add_io(noise_cmd);
    add_pattern(noise_cmd);
    add_depth(noise_cmd);
    noise_flags.attach(*noise_cmd);

    // decompose ---------------------------------------------------------
    auto* decompose_cmd = app.add_subcommand(
        "decompose", "Split a PGM mosaic into R, G1, G2, B sub-images (<out>_r.pgm, <out>_g1.pgm, ...)");
    add_io(decompose_cmd);
    add_pattern(decompose_cmd);
    add_depth(decompose_cmd);

    // denoise -----------------------------------------------------------
    DenoiserFlags dn_flags;
    bool cfa_mode = false;
    auto* denoise_cmd = app.add_subcommand(
        "denoise", "Denoise a PGM plane, each channel of a PPM, or (--cfa) a mosaic via its sub-images");
    add_io(denoise_cmd);
    add_pattern(denoise_cmd, "Bayer phase used with --cfa");
    add_depth(denoise_cmd);
    dn_flags.attach(*denoise_cmd, false);
    denoise_cmd->add_flag("--cfa", cfa_mode, "Treat the PGM input as a mosaic: decompose, denoise, recompose");

    // demosaic ----------------------------------------------------------
    DemosaickerFlags dm_flags;
    auto* demosaic_cmd = app.add_subcommand("demosaic", "Reconstruct an RGB PPM from a PGM mosaic");
    add_io(demosaic_cmd);
    add_pattern(demosaic_cmd);
    add_depth(demosaic_cmd);
    dm_flags.attach(*demosaic_cmd, false);

    // pipeline ----------------------------------------------------------
    std::string strategy_text = "before";
    bool timing = false;
    auto* pipeline_cmd = app.add_subcommand(
        "pipeline", "Run one strategy on an RGB PPM; writes the reconstruction and prints a CSV record");
    add_io(pipeline_cmd);
    add_pattern(pipeline_cmd);
    add_depth(pipeline_cmd);
    pipeline_cmd->add_option("--strategy", strategy_text, "after|joint|before")->capture_default_str();
    noise_flags.attach(*pipeline_cmd);
    dn_flags.attach(*pipeline_cmd, false);
    dm_flags.attach(*pipeline_cmd, false);
    pipeline_cmd->add_flag("--timing", timing, "Record wall time (otherwise wall_ms is 'na')");

    // experiment --------------------------------------------------------
    std::vector<std::string> inputs;
    std::string corpus_name;
    std::size_t synth_size = 128;
    std::string strategies_text = "after,before";
    std::string sigmas_text = "0.02,0.05,0.1";
    std::size_t seeds = 5;
    std::uint64_t master_seed = 0;
    unsigned jobs = 0;
    DenoiserFlags exp_dn;
    DemosaickerFlags exp_dm;
    auto* experiment_cmd = app.add_subcommand(
        "experiment", "Sweep strategies x sigmas x configs x seeds over a corpus; writes CSV");
    experiment_cmd->add_option("--in", inputs, "Corpus PPM (repeatable); image id is the file stem");
    experiment_cmd->add_option("--corpus", corpus_name, "Built-in corpus: 'synthetic' (blobs, stripes, rings)");
    experiment_cmd->add_option("--size", synth_size, "Width and height of synthetic corpus images")
        ->capture_default_str();
    experiment_cmd->add_option("--out", out_path, "CSV output path (default stdout)");
    experiment_cmd->add_option("--pattern", pattern_text, "Bayer phases, comma-separated")
        ->capture_default_str();
    experiment_cmd->add_option("--strategy", strategies_text, "Strategies, comma-separated: after,joint,before")
        ->capture_default_str();
    experiment_cmd->add_option("--sigmas", sigmas_text, "Noise sigmas, comma-separated (all color classes)")
        ->capture_default_str();
    experiment_cmd->add_option("--seeds", seeds, "Noise realizations per grid point")->capture_default_str();
    experiment_cmd->add_option("--seed", master_seed, "Master seed")->capture_default_str();
    experiment_cmd->add_option("--jobs", jobs, "Worker threads (0 = number of processors)")
        ->capture_default_str();
    experiment_cmd->add_flag("--timing", timing, "Record wall time (otherwise wall_ms is 'na')");
    exp_dn.attach(*experiment_cmd, true);
    exp_dm.attach(*experiment_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "cfaisp: " << msg << '\n';
        return 1;
    }

    try {
        if (mosaic_cmd->parsed()) {
            check_bit_depth(bit_depth);
            const auto pattern = parse_pattern(pattern_text);
            const auto rgb = read_ppm(in_path);
            write_file(out_path, encode_pnm(mosaic_from_rgb(rgb, pattern).plane(), bit_depth));
        } else if (noise_cmd->parsed()) {
            check_bit_depth(bit_depth);
            const auto pattern = parse_pattern(pattern_text);
            const auto spec = noise_flags.spec();
            const auto noisy = add_awgn(load_mosaic(in_path, pattern), spec);
            write_file(out_path, encode_pnm(noisy.plane(), bit_depth));
        } else if (decompose_cmd->parsed()) {
            check_bit_depth(bit_depth);
            const auto pattern = parse_pattern(pattern_text);
            const auto subs = decompose(load_mosaic(in_path, pattern));
            write_file(out_path + "_r.pgm", encode_pnm(subs.r, bit_depth));
            write_file(out_path + "_g1.pgm", encode_pnm(subs.g1, bit_depth));
            write_file(out_path + "_g2.pgm", encode_pnm(subs.g2, bit_depth));
            write_file(out_path + "_b.pgm", encode_pnm(subs.b, bit_depth));
        } else if (denoise_cmd->parsed()) {
            check_bit_depth(bit_depth);
            const auto cfg = dn_flags.make(dn_flags.kinds);
            auto image = read_pnm(in_path);
            if (auto* plane = std::get_if<Plane>(&image)) {
                if (cfa_mode) {
                    const auto pattern = parse_pattern(pattern_text);
                    const auto cleaned = recompose(denoise_subimages(decompose(MosaicImage(pattern, *plane)), cfg));
                    write_file(out_path, encode_pnm(cleaned.plane(), bit_depth));
                } else {
                    write_file(out_path, encode_pnm(denoise(*plane, cfg), bit_depth));
                }
            } else {
                if (cfa_mode) throw UsageError("--cfa: input must be a PGM mosaic");
                auto rgb = std::get<RgbImage>(std::move(image));
                for (int ch = 0; ch < 3; ++ch) rgb.channel(ch) = denoise(rgb.channel(ch), cfg);
                write_file(out_path, encode_pnm(rgb, bit_depth));
            }
        } else if (demosaic_cmd->parsed()) {
            check_bit_depth(bit_depth);
            const auto pattern = parse_pattern(pattern_text);
            const auto cfg = dm_flags.make(dm_flags.kinds);
            write_file(out_path, encode_pnm(demosaic(load_mosaic(in_path, pattern), cfg), bit_depth));
        } else if (pipeline_cmd->parsed()) {
            check_bit_depth(bit_depth);
            const auto pattern = parse_pattern(pattern_text);
            const auto strategy = parse_strategy_flag(strategy_text);
            const auto spec = noise_flags.spec();
            const auto dn = dn_flags.make(dn_flags.kinds);
            const auto dm = dm_flags.make(dm_flags.kinds);
            try {
                check_consistency(strategy, dn, dm);
            } catch (const ConfigError& e) {
                throw UsageError(std::string("--strategy: ") + e.what());
            }
            const auto truth = read_ppm(in_path);
            const auto result = run_pipeline(truth, pattern, spec, strategy, dn, dm,
                                              fs::path(in_path).stem().string(), timing);
            write_file(out_path, encode_pnm(result.output, bit_depth));
            out << kCsvHeader << '\n' << csv_row(result.record) << '\n';
        } else if (experiment_cmd->parsed()) {
            std::vector<CorpusImage> corpus;
            if (!corpus_name.empty()) {
                if (corpus_name != "synthetic") {
                    throw UsageError("--corpus: unknown corpus '" + corpus_name + "'");
                }
                if (synth_size == 0 || synth_size % 2 != 0) {
                    throw UsageError("--size: must be a positive even number");
                }
                corpus = synthetic::default_corpus(synth_size, synth_size);
            }
            for (const auto& path : inputs) {
                corpus.push_back({fs::path(path).stem().string(), read_ppm(path)});
            }
            if (corpus.empty()) throw UsageError("experiment: give --in files or --corpus synthetic");

            ExperimentGrid grid;
            grid.patterns.clear();
            for (const auto& p : split_list(pattern_text)) grid.patterns.push_back(parse_pattern(p));
            grid.sigmas.clear();
            for (const auto& s : split_list(sigmas_text)) {
                const double v = parse_real(s, "--sigmas");
                if (!(v >= 0.0)) throw UsageError("--sigmas: values must be >= 0");
                grid.sigmas.push_back(v);
            }
            grid.strategies.clear();
            for (const auto& s : split_list(strategies_text)) grid.strategies.push_back(parse_strategy_flag(s));
            grid.denoisers = exp_dn.make_all();
            grid.demosaickers.clear();
            bool have_joint = false;
            for (const auto& k : split_list(exp_dm.kinds)) {
                const auto cfg = exp_dm.make(k);
                if (cfg.kind == DemosaickerKind::joint_bilateral) {
                    grid.joint = cfg;
                    have_joint = true;
                } else {
                    grid.demosaickers.push_back(cfg);
                }
            }
            const bool needs_plain = std::any_of(grid.strategies.begin(), grid.strategies.end(),
                                                 [](Strategy s) { return s != Strategy::Joint; });
            if (needs_plain && grid.demosaickers.empty()) {
                throw UsageError("--demosaicker: strategies after/before need bilinear or gradient");
            }
            if (!have_joint) {
                grid.joint = DemosaickerConfig::joint_bilateral(exp_dm.sigma_s, exp_dm.sigma_r);
                grid.joint.validate();
            }
            if (seeds == 0) throw UsageError("--seeds: must be >= 1");
            grid.replicas = seeds;
            grid.master_seed = master_seed;

            ExperimentOptions options;
            options.jobs = jobs;
            options.timing = timing;
            const auto records = run_experiment(corpus, grid, options);
            emit(out, write_csv(records), out_path);
        }
    } catch (const UsageError& e) {
        err << "cfaisp: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "cfaisp: " << msg << '\n';
        return 2;
    }
    return 0;
}

}  // namespace cfa::cli
