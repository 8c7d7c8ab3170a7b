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

// Writes the built-in synthetic corpus as PPM files.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "cfa/error.hpp"
#include "cfa/imageio.hpp"
#include "cfa/synthetic.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Write the synthetic test corpus (blobs, stripes, rings) as PPM files"};
    std::string dir = ".";
    std::size_t size = 128;
    app.add_option("--out-dir", dir, "Destination directory")->capture_default_str();
    app.add_option("--size", size, "Width and height in pixels (even)")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    if (size == 0 || size % 2 != 0) {
        std::cerr << "cfa_corpus: --size must be a positive even number\n";
        return 1;
    }
    try {
        std::filesystem::create_directories(dir);
        for (const auto& img : cfa::synthetic::default_corpus(size, size)) {
            const auto path = std::filesystem::path(dir) / (img.id + ".ppm");
            cfa::write_file(path, cfa::encode_pnm(img.rgb, 8));
            std::cout << path.string() << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "cfa_corpus: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
