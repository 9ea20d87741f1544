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

// Deterministic subword tokenizer engine: BPE training and encoding,
// unigram Viterbi encoding from a supplied model, lossless decoding and a
// canonical JSON model format.
//
// Words are marked with a word-initial marker ("▁" by default) which is
// glued to the first character, so the initial symbols of "ab" are
// ["▁a", "b"]. Segmentation strips the marker again, so boundaries always
// index into the raw word.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace morphalign::tok {

inline constexpr std::string_view kDefaultMarker = "\xE2\x96\x81";  // U+2581
inline constexpr std::string_view kUnk = "<unk>";
inline constexpr std::string_view kBos = "<s>";
inline constexpr std::string_view kEos = "</s>";
inline constexpr std::string_view kPad = "<pad>";

std::vector<std::string> default_specials();

enum class ModelKind { kBpe, kUnigram };

/// One word's tokenization.
struct Segmentation {
  std::string word;
  /// Token strings with the marker stripped; concatenation equals `word`.
  std::vector<std::string> tokens;
  /// The same tokens as they appear in the vocabulary (marker kept). A
  /// unigram word that starts with an unmarked piece gets a leading lone
  /// marker piece, which has no entry in `tokens`.
  std::vector<std::string> pieces;
  /// Vocabulary id per piece; the UNK id (or -1 when the model has no UNK
  /// special) for characters outside the vocabulary.
  std::vector<int> ids;
  /// Interior cut positions in scalar values, strictly increasing.
  std::vector<std::size_t> boundaries;
};

/// Immutable after construction; safe to share between threads.
///
/// Id space: specials occupy [0, |specials|), regular vocabulary entries
/// follow in order.
class TokenizerModel {
 public:
  using Merge = std::pair<std::string, std::string>;

  /// Both factories validate every invariant and throw FormatError on
  /// violation.
  static TokenizerModel bpe(std::vector<std::string> vocab,
                            std::vector<Merge> merges,
                            std::string marker = std::string(kDefaultMarker),
                            std::vector<std::string> specials = default_specials(),
                            std::optional<int> vocab_size_target = std::nullopt);
  static TokenizerModel unigram(std::vector<std::string> vocab,
                                std::vector<double> scores,
                                std::string marker = std::string(kDefaultMarker),
                                std::vector<std::string> specials = default_specials(),
                                std::optional<int> vocab_size_target = std::nullopt);

  ModelKind kind() const { return kind_; }
  const std::vector<std::string>& vocab() const { return vocab_; }
  const std::vector<Merge>& merges() const { return merges_; }
  const std::vector<double>& scores() const { return scores_; }
  const std::string& marker() const { return marker_; }
  const std::vector<std::string>& specials() const { return specials_; }
  int vocab_size_target() const { return vocab_size_target_; }

  /// Specials plus regular vocabulary.
  int size() const { return static_cast<int>(specials_.size() + vocab_.size()); }

  std::optional<int> id_of(std::string_view piece) const;
  const std::string& piece(int id) const;
  bool is_special(int id) const {
    return id >= 0 && id < static_cast<int>(specials_.size());
  }
  std::optional<int> special_id(std::string_view name) const;

  /// Rank of a merge in learning order, if present.
  std::optional<int> merge_rank(std::string_view left,
                                std::string_view right) const;
  /// Score of a regular vocabulary entry (unigram only).
  std::optional<double> score_of(std::string_view piece) const;
  double min_score() const { return min_score_; }
  std::size_t max_piece_chars() const { return max_piece_chars_; }

  bool operator==(const TokenizerModel& other) const;

 private:
  TokenizerModel() = default;
  void build_index();

  ModelKind kind_ = ModelKind::kBpe;
  std::vector<std::string> vocab_;
  std::vector<Merge> merges_;
  std::vector<double> scores_;
  std::string marker_;
  std::vector<std::string> specials_;
  int vocab_size_target_ = 0;

  std::unordered_map<std::string, int> ids_;
  std::unordered_map<std::string, int> merge_ranks_;
  double min_score_ = 0.0;
  std::size_t max_piece_chars_ = 0;
};

/// Learns BPE merges over whitespace-split `corpus` until the model holds
/// `vocab_size_target` entries (specials included) or no pair remains.
/// The initial alphabet holds every corpus character both bare and
/// marker-prefixed. Pairs are ranked by count, ties broken by the
/// lexicographic order of (left, right); pairs whose product is already a
/// vocabulary entry are never selected.
TokenizerModel train_bpe(std::span<const std::string> corpus,
                         int vocab_size_target,
                         std::string marker = std::string(kDefaultMarker),
                         std::vector<std::string> specials = default_specials());

/// Throws InputError on an empty word or one containing whitespace.
Segmentation encode_word(const TokenizerModel& model, std::string_view word);

/// Builds a Segmentation from externally produced token strings (marker
/// already stripped). Throws InputError unless they concatenate to `word`.
Segmentation segmentation_from_tokens(std::string_view word,
                                      std::vector<std::string> tokens);

/// Whitespace pre-tokenization followed by encode_word on every word.
/// With add_specials the sequence is wrapped in <s> ... </s>.
std::vector<int> encode_text(const TokenizerModel& model, std::string_view text,
                             bool add_specials);

/// Inverse of encode_text up to whitespace normalization. Specials other
/// than UNK are dropped; UNK decodes to its literal name.
std::string decode(const TokenizerModel& model, std::span<const int> ids);

/// Encodes every word of every line. Lines are processed in parallel and
/// returned in input order.
std::vector<std::vector<Segmentation>> encode_corpus(
    const TokenizerModel& model, std::span<const std::string> lines);

/// Single-threaded reference for encode_corpus.
std::vector<std::vector<Segmentation>> encode_corpus_serial(
    const TokenizerModel& model, std::span<const std::string> lines);

/// Canonical JSON: kind, marker, specials, vocab, merges|scores,
/// vocab_size_target; two-space indent, trailing newline.
std::string to_json(const TokenizerModel& model);
/// `origin` prefixes error messages (usually the file path).
TokenizerModel from_json(std::string_view text, std::string_view origin = "<json>");

void save_model(const TokenizerModel& model, const std::filesystem::path& path);
TokenizerModel load_model(const std::filesystem::path& path);

/// Imports plain-text exports: one vocabulary entry per line, optionally
/// followed by a tab and a log-probability (unigram), and an optional merges
/// file with one space-separated pair per line (BPE). A merges file selects
/// BPE; otherwise every vocab line must carry a score. Entries listed in
/// `specials` are moved out of the regular vocabulary.
TokenizerModel import_text_model(const std::filesystem::path& vocab_path,
                                 const std::optional<std::filesystem::path>& merges_path,
                                 std::string marker = std::string(kDefaultMarker),
                                 std::vector<std::string> specials = default_specials());

}  // namespace morphalign::tok
