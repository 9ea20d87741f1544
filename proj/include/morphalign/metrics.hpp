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


// Intrinsic tokenization metrics over a corpus: corpus token count (CTC),
// fertility, mean token length and Rényi entropy of the token-type
// distribution.
//
// Counts follow encode_text without sequence specials. The type
// distribution is over token types observed in the corpus (UNK excluded),
// so efficiency normalizes by log2 of the observed type count, not the
// vocabulary size. Logs are base 2.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphalign/tokenizer.hpp"

namespace morphalign::metrics {

inline constexpr double kDefaultAlpha = 2.5;

/// Associative accumulator; merging chunk tallies in any grouping gives
/// the same totals.
struct CorpusTally {
  std::size_t tokens = 0;
  std::size_t words = 0;
  /// Scalar values over all token instances, marker excluded.
  std::size_t token_chars = 0;
  /// Token instances keyed by vocabulary piece; UNK instances are not here.
  std::map<std::string, std::size_t> type_counts;

  void merge(const CorpusTally& other);
};

/// Chunked over lines on the OpenMP pool.
CorpusTally tally_corpus(const tok::TokenizerModel& model, std::span<const std::string> lines);
/// Single-threaded reference for tally_corpus.
CorpusTally tally_corpus_serial(const tok::TokenizerModel& model,
                                std::span<const std::string> lines);

struct Renyi {
  double entropy_bits = 0.0;
  double efficiency = 0.0;
};

/// H_a = log2(sum p^a) / (1 - a) over the normalized counts; a == 1 is
/// Shannon entropy. One type gives entropy 0 and efficiency 0. Throws
/// ConfigError unless alpha > 0, InputError when the counts sum to zero.
Renyi renyi_from_counts(std::span<const std::size_t> counts, double alpha);

std::size_t ctc(const tok::TokenizerModel& model, std::span<const std::string> lines);
Renyi renyi(const tok::TokenizerModel& model, std::span<const std::string> lines, double alpha);
/// Throws InputError when the corpus has no tokens.
double mean_token_length(const tok::TokenizerModel& model, std::span<const std::string> lines);

struct MetricsReport {
  std::string lang;
  std::size_t ctc = 0;
  std::size_t n_words = 0;
  double fertility = 0.0;
  double mean_token_len = 0.0;
  double renyi_alpha = kDefaultAlpha;
  double renyi_entropy = 0.0;
  double renyi_efficiency = 0.0;
  std::size_t n_token_types = 0;
};

/// Throws InputError when the tally holds no tokens.
MetricsReport report_from_tally(const CorpusTally& tally, std::string lang, double alpha);
MetricsReport compute_metrics(const tok::TokenizerModel& model,
                              std::span<const std::string> lines, std::string lang,
                              double alpha = kDefaultAlpha);

/// CSV with a leading `model` column, then the MetricsReport fields.
std::string metrics_csv_header();
std::string metrics_csv_row(const MetricsReport& r, std::string_view model_name);

}  // namespace morphalign::metrics
