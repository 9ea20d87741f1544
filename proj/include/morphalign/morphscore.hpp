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

// MorphScore: how often a tokenizer places a token boundary exactly at an
// annotated morpheme boundary.
//
// An item scores 1 when the gold boundary is among the token boundaries,
// whatever other cuts the tokenizer makes, and 0 otherwise. Words kept
// whole (one token) are excluded in strict mode and count as correct in
// lenient mode.

#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphalign/morph_item.hpp"
#include "morphalign/stats.hpp"
#include "morphalign/tokenizer.hpp"

namespace morphalign::morph {

enum class Mode { kStrict, kLenient };
enum class Outcome { kCorrect, kIncorrect, kExcluded };

/// Throws InputError if seg.word != item.word.
Outcome score_item(const tok::Segmentation& seg, const MorphItem& item, Mode mode);

using Segmenter = std::function<tok::Segmentation(std::string_view word)>;

Segmenter segmenter_for(const tok::TokenizerModel& model);

struct MorphScoreReport {
  std::string lang;
  std::size_t n_total = 0;
  std::size_t n_excluded_single_token = 0;
  std::size_t n_scored = 0;
  /// NaN when every item was excluded (n_scored == 0).
  double score_strict = 0.0;
  double score_lenient = 0.0;
  /// Tokens per item over all items, one-token words included.
  double mean_fertility = 0.0;
  /// Scalar values per item.
  double mean_word_len = 0.0;
  std::size_t one_token_count = 0;
  double one_token_prop = 0.0;

  bool strict_defined() const { return n_scored > 0; }
};

/// Items must be non-empty and share one language. Items are segmented in
/// parallel; the report does not depend on item order or thread count.
MorphScoreReport morphscore(const Segmenter& segment, std::span<const MorphItem> items);
MorphScoreReport morphscore(const tok::TokenizerModel& model, std::span<const MorphItem> items);

/// Single-threaded reference for morphscore.
MorphScoreReport morphscore_serial(const Segmenter& segment, std::span<const MorphItem> items);

/// Splits items by language, preserving first-appearance order.
std::vector<std::vector<MorphItem>> group_by_lang(std::span<const MorphItem> items);

struct GroupComparison {
  std::string group_a;
  std::string group_b;
  std::vector<std::string> langs_a;
  std::vector<std::string> langs_b;
  stats::TTestResult test;
};

/// Welch t-test of strict scores between the two morphological types named
/// in `profile` (lang -> type). Groups are ordered by name, so the
/// statistic is positive when the alphabetically first type scores higher.
/// Needs exactly two types with at least two reports each; a report with an
/// undefined strict score is a StatError.
GroupComparison compare_groups(std::span<const MorphScoreReport> reports,
                               const std::map<std::string, std::string>& profile);

/// CSV with one row per report, columns in MorphScoreReport field order.
std::string report_csv_header();
std::string report_csv_row(const MorphScoreReport& r);
void write_reports_csv(std::ostream& out, std::span<const MorphScoreReport> reports);

}  // namespace morphalign::morph
