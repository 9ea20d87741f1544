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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morphalign {

enum class Source { kUD, kUniMorph, kSynthetic };

std::string_view to_string(Source s);
/// Accepts "UD", "UniMorph", "Synthetic" (case-insensitive).
Source parse_source(std::string_view s);

/// One evaluation word with a single gold morpheme boundary, given as the
/// number of scalar values before the cut.
struct MorphItem {
  std::string word;
  std::size_t boundary = 0;
  std::string lang;
  Source source = Source::kUD;

  bool operator==(const MorphItem&) const = default;
};

/// Throws InputError unless 0 < boundary < charlen(word) and the word has
/// no whitespace.
void validate(const MorphItem& item);

/// Dataset TSV: header `word\tboundary\tlang\tsource`, one item per row.
std::vector<MorphItem> read_dataset_tsv(std::istream& in, std::string_view origin);
std::vector<MorphItem> read_dataset_tsv(const std::filesystem::path& path);
void write_dataset_tsv(std::ostream& out, std::span<const MorphItem> items);
void write_dataset_tsv(const std::filesystem::path& path, std::span<const MorphItem> items);

}  // namespace morphalign
