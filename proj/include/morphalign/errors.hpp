// Copyright 2026 The MorphAlign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morphalign {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller-supplied data (empty corpus, mismatched word, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration (vocab target too small, impossible synth spec).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A file could not be parsed. The message carries line/field context.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Statistical precondition failure (undersized group, rank deficiency).
class StatError : public Error {
 public:
  using Error::Error;
};

class DatasetTooSmall : public Error {
 public:
  explicit DatasetTooSmall(std::size_t count)
      : Error("dataset too small: " + std::to_string(count) +
              " items after filtering"),
        count_(count) {}

  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

}  // namespace morphalign
