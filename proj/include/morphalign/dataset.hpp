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

// Building MorphScore datasets from CoNLL-U treebanks and UniMorph tables,
// and reading line-aligned parallel corpora.
//
// Boundaries come from the lemma-prefix rule: a (form, lemma) pair yields
// an item when the form starts with the lemma (exact, case-sensitive) and
// continues past it; the boundary sits right after the lemma. Anything
// else (suppletion, stem changes, prefixes) is dropped. Explicit
// segmentations in UniMorph rows bypass the rule.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphalign/morph_item.hpp"

namespace morphalign::data {

struct ConlluToken {
  std::string form;
  std::string lemma;
  std::string upos;
  std::string feats;
};

/// Skips comments, multiword ranges ("3-4") and empty nodes ("5.1"). A
/// token line without exactly 10 tab-separated columns is a FormatError
/// naming the line.
std::vector<ConlluToken> parse_conllu(std::istream& in, std::string_view origin);
std::vector<ConlluToken> parse_conllu(const std::filesystem::path& path);

std::vector<MorphItem> derive_items(std::span<const ConlluToken> tokens, std::string_view lang);

/// Rows are `lemma \t form \t features [\t segmentation]`. A segmentation
/// such as "aldi|z" must spell the form and gives the boundary after its
/// first segment; otherwise the lemma-prefix rule applies.
std::vector<MorphItem> parse_unimorph(std::istream& in, std::string_view lang,
                                      std::string_view origin);
std::vector<MorphItem> parse_unimorph(const std::filesystem::path& path, std::string_view lang);

inline constexpr std::size_t kMaxItems = 2000;
inline constexpr std::size_t kMinItems = 100;

/// Deduplicates (word, boundary), collapses words annotated with several
/// boundaries to the left-most one, rejects sets under kMinItems with
/// DatasetTooSmall and samples exactly kMaxItems (seeded, input order kept)
/// from larger sets. Idempotent.
std::vector<MorphItem> finalize_dataset(std::vector<MorphItem> items, std::uint64_t seed);

/// Content-matched texts: lines[k][i] is line i in language langs[k].
struct ParallelCorpus {
  std::vector<std::string> langs;
  std::vector<std::vector<std::string>> lines;

  /// Throws InputError for an unknown language.
  const std::vector<std::string>& of(std::string_view lang) const;
};

/// Reads one file per language; unequal line counts are a FormatError.
ParallelCorpus read_parallel(
    std::span<const std::pair<std::string, std::filesystem::path>> files);

/// Writes `<dir>/<lang>.txt` for every language.
void write_parallel(const ParallelCorpus& corpus, const std::filesystem::path& dir);

}  // namespace morphalign::data
