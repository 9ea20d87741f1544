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


#include "morphalign/synthlang.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <set>

#include "json.hpp"
#include "morphalign/errors.hpp"
#include "morphalign/rng.hpp"
#include "morphalign/utf8.hpp"

namespace morphalign::synth {
namespace {

constexpr std::uint64_t kRootStream = 1;
constexpr std::uint64_t kAffixStream = 2;
constexpr std::uint64_t kSampleStream = 3;

// Strings of exactly `len` symbols, saturating.
std::size_t strings_of_length(std::size_t symbols, std::size_t len) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (n > std::numeric_limits<std::size_t>::max() / symbols) {
      return std::numeric_limits<std::size_t>::max();
    }
    n *= symbols;
  }
  return n;
}

std::size_t capacity(std::size_t symbols, LengthRange r) {
  std::size_t total = 0;
  for (std::size_t len = r.min; len <= r.max; ++len) {
    const std::size_t n = strings_of_length(symbols, len);
    if (total > std::numeric_limits<std::size_t>::max() - n) {
      return std::numeric_limits<std::size_t>::max();
    }
    total += n;
  }
  return total;
}

void check_range(const LengthRange& r, const char* what) {
  if (r.min == 0 || r.max < r.min) {
    throw ConfigError(std::string("synth: ") + what + " length range must satisfy 1 <= min <= max");
  }
  if (r.max > 64) throw ConfigError(std::string("synth: ") + what + " length above 64");
}

// `count` distinct strings. Lengths are uniform over the range; a length
// whose strings are used up is redrawn, so distinctness never biases the
// length distribution until a bucket is exhausted.
std::vector<std::string> distinct_strings(Rng& rng, const std::vector<std::string>& alphabet,
                                          LengthRange range, std::size_t count) {
  std::set<std::string> seen;
  std::vector<std::size_t> used(range.max - range.min + 1, 0);
  std::vector<std::string> out;
  out.reserve(count);
  while (out.size() < count) {
    const auto k = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(used.size()) - 1));
    if (used[k] >= strings_of_length(alphabet.size(), range.min + k)) continue;
    std::string s;
    for (std::size_t i = 0; i < range.min + k; ++i) s += alphabet[rng.below(alphabet.size())];
    if (!seen.insert(s).second) continue;
    ++used[k];
    out.push_back(std::move(s));
  }
  return out;
}

double mean_length(LengthRange r) { return (static_cast<double>(r.min) + r.max) / 2.0; }

}  // namespace

std::string to_string(Typology t) {
  return t == Typology::kAgglutinative ? "agglutinative" : "fusional";
}

Typology parse_typology(std::string_view s) {
  std::string lower(s);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "agglutinative") return Typology::kAgglutinative;
  if (lower == "fusional") return Typology::kFusional;
  throw ConfigError("unknown typology '" + std::string(s) + "' (agglutinative|fusional)");
}

std::vector<std::string> SynthSpec::default_alphabet() {
  return {"a", "e", "i", "o", "u", "b", "d", "g", "k", "l", "m", "n", "p", "r", "s", "t", "z"};
}

std::string SynthSpec::lang_code() const {
  if (!lang.empty()) return lang;
  return typology == Typology::kAgglutinative ? "syn_agg" : "syn_fus";
}

void validate(const SynthSpec& spec) {
  check_range(spec.root_len, "root");
  check_range(spec.affix_len, "affix");
  std::set<std::string> symbols;
  for (const auto& a : spec.alphabet) {
    if (utf8::length(a) != 1 || utf8::contains_space(a)) {
      throw ConfigError("synth: alphabet entry '" + a + "' is not a single non-space character");
    }
    symbols.insert(a);
  }
  if (symbols.size() != spec.alphabet.size()) throw ConfigError("synth: duplicate alphabet entry");
  if (symbols.size() < 2) throw ConfigError("synth: alphabet needs at least 2 symbols");
  if (spec.n_roots == 0) throw ConfigError("synth: n_roots must be >= 1");
  if (!(spec.zipf_s >= 0.0) || !std::isfinite(spec.zipf_s)) {
    throw ConfigError("synth: zipf_s must be a finite number >= 0");
  }
  if (spec.words_per_line == 0) throw ConfigError("synth: words_per_line must be >= 1");

  std::size_t per_inventory = 0;
  if (spec.typology == Typology::kAgglutinative) {
    if (spec.n_slots == 0) throw ConfigError("synth: agglutinative specs need n_slots >= 1");
    if (spec.n_affixes_per_slot == 0) throw ConfigError("synth: n_affixes_per_slot must be >= 1");
    per_inventory = spec.n_affixes_per_slot;
  } else {
    if (spec.paradigm_size == 0) throw ConfigError("synth: fusional specs need paradigm_size >= 1");
    per_inventory = spec.paradigm_size;
  }
  if (capacity(symbols.size(), spec.root_len) < spec.n_roots) {
    throw ConfigError("synth: alphabet and root lengths allow fewer than " +
                      std::to_string(spec.n_roots) + " distinct roots");
  }
  if (capacity(symbols.size(), spec.affix_len) < per_inventory) {
    throw ConfigError("synth: alphabet and affix lengths allow fewer than " +
                      std::to_string(per_inventory) + " distinct affixes");
  }
}

Lexicon make_lexicon(const SynthSpec& spec) {
  validate(spec);
  Lexicon lex;
  Rng roots(Rng::derive(spec.seed, kRootStream));
  lex.roots = distinct_strings(roots, spec.alphabet, spec.root_len, spec.n_roots);
  Rng affixes(Rng::derive(spec.seed, kAffixStream));
  if (spec.typology == Typology::kAgglutinative) {
    for (std::size_t s = 0; s < spec.n_slots; ++s) {
      lex.slots.push_back(
          distinct_strings(affixes, spec.alphabet, spec.affix_len, spec.n_affixes_per_slot));
    }
  } else {
    lex.slots.push_back(
        distinct_strings(affixes, spec.alphabet, spec.affix_len, spec.paradigm_size));
  }
  return lex;
}

SynthCorpus generate(const SynthSpec& spec, std::size_t n_words) {
  return generate(spec, make_lexicon(spec), n_words);
}

SynthCorpus generate(const SynthSpec& spec, const Lexicon& lexicon, std::size_t n_words) {
  if (n_words == 0) throw ConfigError("synth: n_words must be >= 1");
  if (spec.words_per_line == 0) throw ConfigError("synth: words_per_line must be >= 1");
  if (lexicon.roots.empty() || lexicon.slots.empty()) {
    throw ConfigError("synth: lexicon needs roots and at least one affix slot");
  }
  for (const auto& slot : lexicon.slots) {
    if (slot.empty()) throw ConfigError("synth: empty affix slot");
  }

  std::vector<double> cumulative;
  cumulative.reserve(lexicon.roots.size());
  double total = 0.0;
  for (std::size_t r = 0; r < lexicon.roots.size(); ++r) {
    total += std::pow(static_cast<double>(r + 1), -spec.zipf_s);
    cumulative.push_back(total);
  }

  SynthCorpus out;
  out.spec = spec;
  const std::string lang = spec.lang_code();
  std::set<std::pair<std::string, std::size_t>> seen;
  Rng rng(Rng::derive(spec.seed, kSampleStream));
  std::string line;
  for (std::size_t i = 0; i < n_words; ++i) {
    const double u = rng.uniform() * total;
    const auto pos = std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
    const std::string& root =
        lexicon.roots[std::min<std::size_t>(static_cast<std::size_t>(pos), lexicon.roots.size() - 1)];
    std::string word = root;
    for (const auto& slot : lexicon.slots) word += slot[rng.below(slot.size())];
    const std::size_t boundary = utf8::length(root);
    if (seen.emplace(word, boundary).second) {
      out.gold.push_back({word, boundary, lang, Source::kSynthetic});
    }
    if (!line.empty()) line += ' ';
    line += word;
    if ((i + 1) % spec.words_per_line == 0) {
      out.lines.push_back(std::move(line));
      line.clear();
    }
  }
  if (!line.empty()) out.lines.push_back(std::move(line));
  return out;
}

double expected_word_length(const SynthSpec& spec) {
  const double slots =
      spec.typology == Typology::kAgglutinative ? static_cast<double>(spec.n_slots) : 1.0;
  return mean_length(spec.root_len) + slots * mean_length(spec.affix_len);
}

std::string spec_to_json(const SynthSpec& spec) {
  nlohmann::ordered_json j;
  j["typology"] = to_string(spec.typology);
  j["lang"] = spec.lang_code();
  j["n_roots"] = spec.n_roots;
  j["root_len"] = {spec.root_len.min, spec.root_len.max};
  j["n_affixes_per_slot"] = spec.n_affixes_per_slot;
  j["n_slots"] = spec.n_slots;
  j["paradigm_size"] = spec.paradigm_size;
  j["affix_len"] = {spec.affix_len.min, spec.affix_len.max};
  j["alphabet"] = spec.alphabet;
  j["zipf_s"] = spec.zipf_s;
  j["seed"] = spec.seed;
  j["words_per_line"] = spec.words_per_line;
  return j.dump(2) + "\n";
}

}  // namespace morphalign::synth
