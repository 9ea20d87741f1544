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

// Plain-text and CSV helpers shared by the readers, writers and the CLI.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morphalign::textio {

std::vector<std::string> split(std::string_view s, char sep);

/// Strict parses; throw InputError on trailing garbage or overflow.
std::size_t parse_size(std::string_view s);
double parse_double(std::string_view s);
std::optional<double> try_parse_double(std::string_view s);

/// Shortest decimal that round-trips; "NaN", "inf", "-inf" for
/// non-finite values.
std::string format_double(double v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view body);

/// Lines without their terminators (LF or CRLF). A trailing newline does not
/// produce an empty last line.
std::vector<std::string> read_lines(const std::filesystem::path& path);
std::vector<std::string> split_lines(std::string_view body);
void write_lines(const std::filesystem::path& path, std::span<const std::string> lines);

/// RFC 4180-style CSV with a header row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a column, if present.
  std::optional<std::size_t> column(std::string_view name) const;
};

Table parse_csv(std::string_view body, std::string_view origin);
Table read_csv(const std::filesystem::path& path);
std::string csv_escape(std::string_view field);
std::string csv_row(std::span<const std::string> fields);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a64_hex(std::string_view data);

}  // namespace morphalign::textio
