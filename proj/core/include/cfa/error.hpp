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

#include <stdexcept>
#include <string>

namespace cfa {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Image geometry does not satisfy an operation's precondition
/// (odd mosaic size, mismatched planes, indivisible wavelet levels).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Invalid parameter or inconsistent configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

enum class DecodeErrc {
    malformed_header,
    truncated_raster,
    unsupported_magic,
    unsupported_maxval,
};

const char* to_string(DecodeErrc code);

class DecodeError : public Error {
public:
    DecodeError(DecodeErrc code, const std::string& what)
        : Error(std::string(to_string(code)) + ": " + what), code_(code) {}

    DecodeErrc code() const noexcept { return code_; }

private:
    DecodeErrc code_;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace cfa
