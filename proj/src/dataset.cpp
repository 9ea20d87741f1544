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

#include "morphalign/dataset.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <unordered_map>

#include "morphalign/errors.hpp"
#include "morphalign/rng.hpp"
#include "morphalign/textio.hpp"
#include "morphalign/utf8.hpp"

namespace morphalign::data {
namespace {

bool usable_word(std::string_view s) {
  return !s.empty() && s != "_" && !utf8::contains_space(s);
}

// Lemma-prefix rule; returns the boundary or 0 when the pair is dropped.
std::size_t prefix_boundary(std::string_view form, std::string_view lemma) {
  if (!usable_word(form) || !usable_word(lemma)) return 0;
  if (form.size() <= lemma.size() || !form.starts_with(lemma)) return 0;
  return utf8::length(lemma);
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<ConlluToken> parse_conllu(std::istream& in, std::string_view origin) {
  std::vector<ConlluToken> tokens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto cols = textio::split(line, '\t');
    if (cols.size() != 10) {
      throw FormatError(std::string(origin) + ":" + std::to_string(lineno) +
                        ": expected 10 tab-separated columns, got " +
                        std::to_string(cols.size()));
    }
    const std::string& id = cols[0];
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) continue;
    tokens.push_back({cols[1], cols[2], cols[3], cols[5]});
  }
  return tokens;
}

std::vector<ConlluToken> parse_conllu(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_conllu(in, path.string());
}

std::vector<MorphItem> derive_items(std::span<const ConlluToken> tokens, std::string_view lang) {
  std::vector<MorphItem> items;
  for (const auto& t : tokens) {
    if (const std::size_t b = prefix_boundary(t.form, t.lemma); b > 0) {
      items.push_back({t.form, b, std::string(lang), Source::kUD});
    }
  }
  return items;
}

std::vector<MorphItem> parse_unimorph(std::istream& in, std::string_view lang,
                                      std::string_view origin) {
  std::vector<MorphItem> items;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::string ctx = std::string(origin) + ":" + std::to_string(lineno) + ": ";
    const auto cols = textio::split(line, '\t');
    if (cols.size() < 3 || cols.size() > 4) {
      throw FormatError(ctx + "expected lemma, form, features[, segmentation]; got " +
                        std::to_string(cols.size()) + " columns");
    }
    const std::string& lemma = cols[0];
    const std::string& form = cols[1];
    if (form.empty() || lemma.empty()) throw FormatError(ctx + "empty lemma or form");

    if (cols.size() == 4 && !cols[3].empty() && cols[3] != "_" && cols[3] != "-") {
      const auto segments = textio::split(cols[3], '|');
      std::string joined;
      for (const auto& s : segments) {
        if (s.empty()) throw FormatError(ctx + "empty segment in '" + cols[3] + "'");
        joined += s;
      }
      if (joined != form) {
        throw FormatError(ctx + "segmentation '" + cols[3] + "' does not spell '" + form + "'");
      }
      if (segments.size() >= 2 && usable_word(form)) {
        items.push_back({form, utf8::length(segments.front()), std::string(lang),
                         Source::kUniMorph});
      }
      continue;
    }
    if (const std::size_t b = prefix_boundary(form, lemma); b > 0) {
      items.push_back({form, b, std::string(lang), Source::kUniMorph});
    }
  }
  return items;
}

std::vector<MorphItem> parse_unimorph(const std::filesystem::path& path, std::string_view lang) {
  auto in = open(path);
  return parse_unimorph(in, lang, path.string());
}

std::vector<MorphItem> finalize_dataset(std::vector<MorphItem> items, std::uint64_t seed) {
  std::set<std::pair<std::string, std::size_t>> seen;
  std::unordered_map<std::string, std::size_t> first_index;
  std::vector<MorphItem> unique;
  for (auto& item : items) {
    if (!seen.emplace(item.word, item.boundary).second) continue;
    const auto [it, inserted] = first_index.emplace(item.word, unique.size());
    if (inserted) {
      unique.push_back(std::move(item));
    } else if (item.boundary < unique[it->second].boundary) {
      unique[it->second].boundary = item.boundary;
    }
  }
  if (unique.size() < kMinItems) throw DatasetTooSmall(unique.size());
  if (unique.size() <= kMaxItems) return unique;

  Rng rng(seed);
  std::vector<MorphItem> sampled;
  sampled.reserve(kMaxItems);
  for (const std::size_t i : rng.sample_indices(unique.size(), kMaxItems)) {
    sampled.push_back(std::move(unique[i]));
  }
  return sampled;
}

const std::vector<std::string>& ParallelCorpus::of(std::string_view lang) const {
  for (std::size_t k = 0; k < langs.size(); ++k) {
    if (langs[k] == lang) return lines[k];
  }
  throw InputError("language '" + std::string(lang) + "' not in parallel corpus");
}

ParallelCorpus read_parallel(
    std::span<const std::pair<std::string, std::filesystem::path>> files) {
  ParallelCorpus corpus;
  for (const auto& [lang, path] : files) {
    for (const auto& existing : corpus.langs) {
      if (existing == lang) throw InputError("language '" + lang + "' listed twice");
    }
    corpus.langs.push_back(lang);
    corpus.lines.push_back(textio::read_lines(path));
    if (corpus.lines.back().size() != corpus.lines.front().size()) {
      throw FormatError(path.string() + ": " + std::to_string(corpus.lines.back().size()) +
                        " lines, but " + corpus.langs.front() + " has " +
                        std::to_string(corpus.lines.front().size()));
    }
  }
  return corpus;
}

void write_parallel(const ParallelCorpus& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t k = 0; k < corpus.langs.size(); ++k) {
    textio::write_lines(dir / (corpus.langs[k] + ".txt"), corpus.lines[k]);
  }
}

}  // namespace morphalign::data
