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


// Synthetic suffixing morphology with gold boundaries.
//
// An agglutinative word is a root followed by one affix from each of
// n_slots inventories; a fusional word is a root followed by one of
// paradigm_size portmanteau affixes. Roots are drawn Zipf(zipf_s) by rank.
// The gold boundary is the root length.
//
// The lexicon is drawn from seed-derived streams (roots, affixes, word
// sampling) so two specs that differ only in typology share their roots.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "morphalign/morph_item.hpp"

namespace morphalign::synth {

enum class Typology { kAgglutinative, kFusional };

std::string to_string(Typology t);
/// "agglutinative" or "fusional", case-insensitive; ConfigError otherwise.
Typology parse_typology(std::string_view s);

struct LengthRange {
  std::size_t min = 1;
  std::size_t max = 1;
};

struct SynthSpec {
  Typology typology = Typology::kAgglutinative;
  std::size_t n_roots = 500;
  LengthRange root_len{3, 6};
  std::size_t n_affixes_per_slot = 4;
  std::size_t n_slots = 3;
  std::size_t paradigm_size = 12;
  LengthRange affix_len{1, 3};
  std::vector<std::string> alphabet = default_alphabet();
  double zipf_s = 1.0;
  std::uint64_t seed = 1;
  std::size_t words_per_line = 10;
  /// Language code stamped on gold items; empty means "syn_agg"/"syn_fus".
  std::string lang;

  static std::vector<std::string> default_alphabet();
  std::string lang_code() const;
};

/// Throws ConfigError on an impossible spec: empty or zero ranges, fewer
/// than two distinct alphabet symbols, n_slots == 0 (agglutinative),
/// paradigm_size == 0 (fusional), too few strings of the allowed lengths
/// for the requested distinct roots or affixes, negative zipf_s.
void validate(const SynthSpec& spec);

/// Roots and affix inventories. Fusional lexicons have a single slot.
struct Lexicon {
  std::vector<std::string> roots;
  std::vector<std::vector<std::string>> slots;
};

Lexicon make_lexicon(const SynthSpec& spec);

struct SynthCorpus {
  std::vector<std::string> lines;
  /// One item per distinct (word, boundary), in first-appearance order.
  std::vector<MorphItem> gold;
  SynthSpec spec;
};

SynthCorpus generate(const SynthSpec& spec, std::size_t n_words);
/// Generation over a fixed lexicon, for hand-built examples.
SynthCorpus generate(const SynthSpec& spec, const Lexicon& lexicon, std::size_t n_words);

/// Mean root length plus the mean affix length per slot, over the length
/// ranges (uniform lengths assumed).
double expected_word_length(const SynthSpec& spec);

/// Canonical JSON of a spec.
std::string spec_to_json(const SynthSpec& spec);

}  // namespace morphalign::synth
