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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cfa/imageio.hpp"
#include "cfa/pipeline.hpp"
#include "cfa/synthetic.hpp"
#include "cli.hpp"

using namespace cfa;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "cfaisp");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("cfaisp_test_" + std::to_string(std::random_device{}()) + "_" + std::to_string(counter_++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string operator/(const std::string& name) const { return (path_ / name).string(); }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("help lists every flag and exits 0") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    for (const char* flag : {"--pattern", "--sigma", "--sigma-r", "--sigma-g", "--sigma-b", "--seed", "--denoiser",
                             "--dn-sigma-s", "--dn-radius", "--dn-sigma-r", "--dn-levels", "--dn-sigma-n",
                             "--demosaicker", "--jb-sigma-s", "--jb-sigma-r", "--strategy", "--jobs", "--out",
                             "--in", "--sigmas", "--seeds", "--timing", "--cfa"}) {
        CHECK_MESSAGE(r.out.find(flag) != std::string::npos, flag);
    }
    for (const char* sub : {"mosaic", "noise", "decompose", "denoise", "demosaic", "pipeline", "experiment"}) {
        CHECK(r.out.find(sub) != std::string::npos);
    }
    CHECK(run_cli({"pipeline", "--help"}).code == 0);
}

TEST_CASE("usage errors exit 1 with one line naming the flag") {
    auto r = run_cli({"mosaic", "--bogus", "1", "--in", "a", "--out", "b"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--bogus") != std::string::npos);
    CHECK(count_lines(r.err) == 1);

    r = run_cli({"mosaic", "--out", "b"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--in") != std::string::npos);

    r = run_cli({});
    CHECK(r.code == 1);

    TempDir dir;
    write_file(dir / "t.ppm", encode_pnm(RgbImage(4, 4, 0.5)));
    r = run_cli({"mosaic", "--pattern", "xyzw", "--in", dir / "t.ppm", "--out", dir / "t.pgm"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--pattern") != std::string::npos);

    r = run_cli({"pipeline", "--strategy", "joint", "--demosaicker", "bilinear", "--in", dir / "t.ppm", "--out",
                 dir / "o.ppm"});
    CHECK(r.code == 1);
    CHECK(r.err.find("joint-bilateral") != std::string::npos);

    r = run_cli({"pipeline", "--dn-sigma-n", "lots", "--in", dir / "t.ppm", "--out", dir / "o.ppm"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--dn-sigma-n") != std::string::npos);
}

TEST_CASE("I/O and processing errors exit 2") {
    TempDir dir;
    auto r = run_cli({"mosaic", "--in", dir / "missing.ppm", "--out", dir / "x.pgm"});
    CHECK(r.code == 2);
    CHECK(r.err.find("missing.ppm") != std::string::npos);

    write_file(dir / "odd.ppm", encode_pnm(RgbImage(5, 4, 0.5)));
    r = run_cli({"mosaic", "--in", dir / "odd.ppm", "--out", dir / "x.pgm"});
    CHECK(r.code == 2);
    CHECK(r.err.find("even dimensions") != std::string::npos);
    CHECK(count_lines(r.err) == 1);

    std::ofstream(dir / "bad.ppm") << "P3 1 1 255\n0 0 0\n";
    r = run_cli({"mosaic", "--in", dir / "bad.ppm", "--out", dir / "x.pgm"});
    CHECK(r.code == 2);
    CHECK(r.err.find("unsupported magic") != std::string::npos);
}

TEST_CASE("stage subcommands chain together") {
    TempDir dir;
    const auto truth = synthetic::natural_image("blobs", 32, 32);
    write_file(dir / "t.ppm", encode_pnm(truth));

    REQUIRE(run_cli({"mosaic", "--pattern", "gbrg", "--in", dir / "t.ppm", "--out", dir / "t.pgm"}).code == 0);
    const auto mosaic = read_pgm(dir / "t.pgm");
    CHECK(mosaic.width() == 32);
    const auto rgb8 = read_ppm(dir / "t.ppm");
    CHECK(mosaic == mosaic_from_rgb(rgb8, CfaPattern{}).plane());

    REQUIRE(run_cli({"noise", "--sigma", "0.05", "--seed", "3", "--bit-depth", "16", "--in", dir / "t.pgm", "--out",
                     dir / "n.pgm"})
                .code == 0);
    const auto noisy = read_pgm(dir / "n.pgm");
    CHECK(noisy != mosaic);

    REQUIRE(run_cli({"decompose", "--in", dir / "n.pgm", "--out", dir / "sub"}).code == 0);
    for (const char* s : {"_r.pgm", "_g1.pgm", "_g2.pgm", "_b.pgm"}) {
        CHECK(read_pgm(dir / (std::string("sub") + s)).width() == 16);
    }

    REQUIRE(run_cli({"denoise", "--cfa", "--denoiser", "wavelet", "--dn-levels", "2", "--in", dir / "n.pgm",
                     "--out", dir / "d.pgm"})
                .code == 0);
    REQUIRE(run_cli({"demosaic", "--demosaicker", "gradient", "--in", dir / "d.pgm", "--out", dir / "d.ppm"}).code ==
            0);
    CHECK(read_ppm(dir / "d.ppm").width() == 32);

    REQUIRE(run_cli({"denoise", "--denoiser", "median", "--dn-radius", "1", "--in", dir / "d.ppm", "--out",
                     dir / "m.ppm"})
                .code == 0);
    REQUIRE(run_cli({"denoise", "--denoiser", "bilateral", "--in", dir / "t.pgm", "--out", dir / "b.pgm"}).code == 0);
    CHECK(run_cli({"denoise", "--cfa", "--in", dir / "t.ppm", "--out", dir / "z.ppm"}).code == 1);
}

TEST_CASE("pipeline subcommand: golden record, byte-identical reruns") {
    TempDir dir;
    write_file(dir / "t.ppm", encode_pnm(synthetic::natural_image("blobs", 64, 64)));
    const std::vector<std::string> args{"pipeline", "--strategy", "before", "--sigma", "0.05", "--seed", "7",
                                        "--denoiser", "wavelet", "--dn-sigma-n", "auto", "--demosaicker", "bilinear",
                                        "--in", dir / "t.ppm", "--out", dir / "out.ppm"};
    const auto r = run_cli(args);
    REQUIRE(r.code == 0);
    const auto out_bytes = slurp(dir / "out.ppm");
    CHECK(out_bytes.rfind("P6 64 64 255\n", 0) == 0);

    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == kCsvHeader);
    std::string golden = slurp(std::string(CFA_GOLDEN_DIR) + "/pipeline_row.txt");
    while (!golden.empty() && (golden.back() == '\n' || golden.back() == '\r')) golden.pop_back();
    CHECK(row == golden);

    const auto again = run_cli(args);
    CHECK(again.out == r.out);
    CHECK(slurp(dir / "out.ppm") == out_bytes);
}

TEST_CASE("experiment subcommand") {
    TempDir dir;
    write_file(dir / "a.ppm", encode_pnm(synthetic::natural_image("rings", 32, 32)));
    const auto r = run_cli({"experiment", "--in", dir / "a.ppm", "--corpus", "synthetic", "--size", "32", "--sigmas",
                            "0.05,0.1", "--strategy", "after,joint,before", "--seeds", "2", "--jobs", "3",
                            "--dn-levels", "2"});
    REQUIRE(r.code == 0);
    // (3 synthetic + 1 file) x 2 sigmas x 3 strategies x 2 seeds
    CHECK(count_lines(r.out) == 1 + 48);
    CHECK(r.out.find("\na,gbrg,") != std::string::npos);

    const auto to_file = run_cli({"experiment", "--corpus", "synthetic", "--size", "32", "--seeds", "1",
                                  "--dn-levels", "2", "--out", dir / "x.csv"});
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    CHECK(count_lines(slurp(dir / "x.csv")) == 1 + 3 * 3 * 2);

    CHECK(run_cli({"experiment"}).code == 1);
    CHECK(run_cli({"experiment", "--corpus", "photos"}).code == 1);
}
