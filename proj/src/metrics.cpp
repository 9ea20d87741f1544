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


#include "morphalign/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "morphalign/errors.hpp"
#include "morphalign/parallel.hpp"
#include "morphalign/textio.hpp"
#include "morphalign/utf8.hpp"

namespace morphalign::metrics {
namespace {

constexpr std::size_t kChunkLines = 256;

void tally_lines(const tok::TokenizerModel& model, std::span<const std::string> lines,
                 CorpusTally& t) {
  const auto unk = model.special_id(tok::kUnk);
  for (const auto& line : lines) {
    for (const auto& word : utf8::split_whitespace(line)) {
      const tok::Segmentation seg = tok::encode_word(model, word);
      ++t.words;
      t.tokens += seg.ids.size();
      for (const auto& token : seg.tokens) t.token_chars += utf8::length(token);
      for (std::size_t k = 0; k < seg.ids.size(); ++k) {
        const int id = seg.ids[k];
        if (id < 0 || (unk && id == *unk)) continue;
        ++t.type_counts[seg.pieces[k]];
      }
    }
  }
}

}  // namespace

void CorpusTally::merge(const CorpusTally& other) {
  tokens += other.tokens;
  words += other.words;
  token_chars += other.token_chars;
  for (const auto& [piece, n] : other.type_counts) type_counts[piece] += n;
}

CorpusTally tally_corpus(const tok::TokenizerModel& model, std::span<const std::string> lines) {
  const std::size_t chunks = (lines.size() + kChunkLines - 1) / kChunkLines;
  const auto parts = parallel::map_ordered<CorpusTally>(chunks, [&](std::size_t c) {
    CorpusTally t;
    const std::size_t begin = c * kChunkLines;
    tally_lines(model, lines.subspan(begin, std::min(kChunkLines, lines.size() - begin)), t);
    return t;
  });
  CorpusTally total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

CorpusTally tally_corpus_serial(const tok::TokenizerModel& model,
                                std::span<const std::string> lines) {
  CorpusTally t;
  tally_lines(model, lines, t);
  return t;
}

Renyi renyi_from_counts(std::span<const std::size_t> counts, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ConfigError("renyi: alpha must be a positive finite number");
  }
  std::vector<std::size_t> sorted;
  double total = 0.0;
  for (const std::size_t c : counts) {
    if (c == 0) continue;
    sorted.push_back(c);
    total += static_cast<double>(c);
  }
  if (sorted.empty()) throw InputError("renyi: corpus encodes to zero tokens");
  if (sorted.size() == 1) return {};
  // Fixed summation order keeps the result independent of map layout.
  std::sort(sorted.begin(), sorted.end());

  double h = 0.0;
  if (alpha == 1.0) {
    for (const std::size_t c : sorted) {
      const double p = static_cast<double>(c) / total;
      h -= p * std::log2(p);
    }
  } else {
    double sum = 0.0;
    for (const std::size_t c : sorted) sum += std::pow(static_cast<double>(c) / total, alpha);
    h = std::log2(sum) / (1.0 - alpha);
  }
  const double eff = h / std::log2(static_cast<double>(sorted.size()));
  return {h, std::clamp(eff, 0.0, 1.0)};
}

std::size_t ctc(const tok::TokenizerModel& model, std::span<const std::string> lines) {
  return tally_corpus(model, lines).tokens;
}

namespace {

std::vector<std::size_t> counts_of(const CorpusTally& t) {
  std::vector<std::size_t> counts;
  counts.reserve(t.type_counts.size());
  for (const auto& [piece, n] : t.type_counts) counts.push_back(n);
  return counts;
}

}  // namespace

Renyi renyi(const tok::TokenizerModel& model, std::span<const std::string> lines, double alpha) {
  return renyi_from_counts(counts_of(tally_corpus(model, lines)), alpha);
}

double mean_token_length(const tok::TokenizerModel& model, std::span<const std::string> lines) {
  const auto t = tally_corpus(model, lines);
  if (t.tokens == 0) throw InputError("mean_token_length: corpus encodes to zero tokens");
  return static_cast<double>(t.token_chars) / static_cast<double>(t.tokens);
}

MetricsReport report_from_tally(const CorpusTally& tally, std::string lang, double alpha) {
  if (tally.tokens == 0) throw InputError("metrics: corpus encodes to zero tokens");
  MetricsReport r;
  r.lang = std::move(lang);
  r.ctc = tally.tokens;
  r.n_words = tally.words;
  r.fertility = static_cast<double>(tally.tokens) / static_cast<double>(tally.words);
  r.mean_token_len = static_cast<double>(tally.token_chars) / static_cast<double>(tally.tokens);
  r.renyi_alpha = alpha;
  r.n_token_types = tally.type_counts.size();
  if (r.n_token_types == 0) {
    // Every token was UNK.
    if (!(alpha > 0.0)) throw ConfigError("renyi: alpha must be a positive finite number");
  } else {
    const Renyi h = renyi_from_counts(counts_of(tally), alpha);
    r.renyi_entropy = h.entropy_bits;
    r.renyi_efficiency = h.efficiency;
  }
  return r;
}

MetricsReport compute_metrics(const tok::TokenizerModel& model,
                              std::span<const std::string> lines, std::string lang,
                              double alpha) {
  return report_from_tally(tally_corpus(model, lines), std::move(lang), alpha);
}

std::string metrics_csv_header() {
  return "model,lang,ctc,n_words,fertility,mean_token_len,renyi_alpha,renyi_entropy,"
         "renyi_efficiency,n_token_types\n";
}

std::string metrics_csv_row(const MetricsReport& r, std::string_view model_name) {
  using textio::format_double;
  const std::vector<std::string> fields = {std::string(model_name),
                                           r.lang,
                                           std::to_string(r.ctc),
                                           std::to_string(r.n_words),
                                           format_double(r.fertility),
                                           format_double(r.mean_token_len),
                                           format_double(r.renyi_alpha),
                                           format_double(r.renyi_entropy),
                                           format_double(r.renyi_efficiency),
                                           std::to_string(r.n_token_types)};
  return textio::csv_row(fields);
}

}  // namespace morphalign::metrics
