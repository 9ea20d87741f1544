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

// Minimal UTF-8 helpers. All character positions in the toolkit count
// Unicode scalar values, never bytes.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace morphalign::utf8 {

/// Splits `s` into one string per scalar value. Throws InputError on
/// malformed UTF-8.
std::vector<std::string> split_chars(std::string_view s);

/// Number of scalar values in `s`.
std::size_t length(std::string_view s);

/// Decodes to code points.
std::u32string decode(std::string_view s);

std::string encode(char32_t cp);

/// White_Space property (Unicode 15).
bool is_space(char32_t cp);

/// Splits on runs of Unicode whitespace; never yields empty pieces.
std::vector<std::string> split_whitespace(std::string_view s);

bool contains_space(std::string_view s);

/// Byte offset of the `index`-th scalar value (index may equal length).
std::size_t byte_offset(std::string_view s, std::size_t index);

}  // namespace morphalign::utf8
