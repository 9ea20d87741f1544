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

#include "morphalign/utf8.hpp"

#include "morphalign/errors.hpp"

namespace morphalign::utf8 {
namespace {

// Returns the sequence length of the scalar starting at s[i], validating
// continuation bytes and rejecting overlongs and surrogates.
std::size_t sequence_length(std::string_view s, std::size_t i, char32_t* out) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  std::size_t len = 0;
  char32_t cp = 0;
  if (b0 < 0x80) {
    *out = b0;
    return 1;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    throw InputError("invalid UTF-8 lead byte at offset " + std::to_string(i));
  }
  if (i + len > s.size()) {
    throw InputError("truncated UTF-8 sequence at offset " + std::to_string(i));
  }
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      throw InputError("invalid UTF-8 continuation at offset " +
                       std::to_string(i + k));
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    throw InputError("invalid UTF-8 scalar at offset " + std::to_string(i));
  }
  *out = cp;
  return len;
}

}  // namespace

std::vector<std::string> split_chars(std::string_view s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  char32_t cp;
  for (std::size_t i = 0; i < s.size();) {
    const std::size_t len = sequence_length(s, i, &cp);
    out.emplace_back(s.substr(i, len));
    i += len;
  }
  return out;
}

std::size_t length(std::string_view s) {
  std::size_t n = 0;
  char32_t cp;
  for (std::size_t i = 0; i < s.size(); ++n) i += sequence_length(s, i, &cp);
  return n;
}

std::u32string decode(std::string_view s) {
  std::u32string out;
  char32_t cp;
  for (std::size_t i = 0; i < s.size();) {
    i += sequence_length(s, i, &cp);
    out.push_back(cp);
  }
  return out;
}

std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> words;
  std::size_t start = 0;
  bool in_word = false;
  char32_t cp;
  for (std::size_t i = 0; i < s.size();) {
    const std::size_t len = sequence_length(s, i, &cp);
    if (is_space(cp)) {
      if (in_word) words.emplace_back(s.substr(start, i - start));
      in_word = false;
    } else if (!in_word) {
      start = i;
      in_word = true;
    }
    i += len;
  }
  if (in_word) words.emplace_back(s.substr(start));
  return words;
}

bool contains_space(std::string_view s) {
  char32_t cp;
  for (std::size_t i = 0; i < s.size();) {
    i += sequence_length(s, i, &cp);
    if (is_space(cp)) return true;
  }
  return false;
}

std::size_t byte_offset(std::string_view s, std::size_t index) {
  std::size_t i = 0;
  char32_t cp;
  for (std::size_t n = 0; n < index; ++n) {
    if (i >= s.size()) throw InputError("character index out of range");
    i += sequence_length(s, i, &cp);
  }
  return i;
}

}  // namespace morphalign::utf8
