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

#include "morphalign/morphscore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <unordered_map>

#include "morphalign/errors.hpp"
#include "morphalign/parallel.hpp"
#include "morphalign/textio.hpp"
#include "morphalign/utf8.hpp"

namespace morphalign::morph {
namespace {

struct ItemTally {
  Outcome outcome = Outcome::kExcluded;
  std::size_t tokens = 0;
  std::size_t chars = 0;
};

ItemTally tally(const Segmenter& segment, const MorphItem& item) {
  const tok::Segmentation seg = segment(item.word);
  return {score_item(seg, item, Mode::kStrict), seg.tokens.size(), utf8::length(item.word)};
}

void check_items(std::span<const MorphItem> items) {
  if (items.empty()) throw InputError("morphscore: no items");
  for (const auto& item : items) {
    if (item.lang != items.front().lang) {
      throw InputError("morphscore: mixed languages '" + items.front().lang + "' and '" +
                       item.lang + "'");
    }
  }
}

MorphScoreReport reduce(std::span<const MorphItem> items, std::span<const ItemTally> tallies) {
  MorphScoreReport r;
  r.lang = items.front().lang;
  r.n_total = items.size();
  std::size_t correct = 0;
  std::size_t tokens = 0;
  std::size_t chars = 0;
  for (const auto& t : tallies) {
    if (t.outcome == Outcome::kExcluded) ++r.n_excluded_single_token;
    if (t.outcome == Outcome::kCorrect) ++correct;
    tokens += t.tokens;
    chars += t.chars;
  }
  const auto n = static_cast<double>(r.n_total);
  r.n_scored = r.n_total - r.n_excluded_single_token;
  r.score_strict = r.n_scored > 0
                       ? static_cast<double>(correct) / static_cast<double>(r.n_scored)
                       : std::numeric_limits<double>::quiet_NaN();
  r.score_lenient = static_cast<double>(correct + r.n_excluded_single_token) / n;
  r.mean_fertility = static_cast<double>(tokens) / n;
  r.mean_word_len = static_cast<double>(chars) / n;
  r.one_token_count = r.n_excluded_single_token;
  r.one_token_prop = static_cast<double>(r.one_token_count) / n;
  return r;
}

}  // namespace

Outcome score_item(const tok::Segmentation& seg, const MorphItem& item, Mode mode) {
  if (seg.word != item.word) {
    throw InputError("score_item: segmentation of '" + seg.word + "' scored against item '" +
                     item.word + "'");
  }
  if (seg.boundaries.empty()) {
    return mode == Mode::kStrict ? Outcome::kExcluded : Outcome::kCorrect;
  }
  return std::binary_search(seg.boundaries.begin(), seg.boundaries.end(), item.boundary)
             ? Outcome::kCorrect
             : Outcome::kIncorrect;
}

Segmenter segmenter_for(const tok::TokenizerModel& model) {
  return [&model](std::string_view word) { return tok::encode_word(model, word); };
}

MorphScoreReport morphscore(const Segmenter& segment, std::span<const MorphItem> items) {
  check_items(items);
  const auto tallies = parallel::map_ordered<ItemTally>(
      items.size(), [&](std::size_t i) { return tally(segment, items[i]); });
  return reduce(items, tallies);
}

MorphScoreReport morphscore(const tok::TokenizerModel& model, std::span<const MorphItem> items) {
  return morphscore(segmenter_for(model), items);
}

MorphScoreReport morphscore_serial(const Segmenter& segment, std::span<const MorphItem> items) {
  check_items(items);
  std::vector<ItemTally> tallies;
  tallies.reserve(items.size());
  for (const auto& item : items) tallies.push_back(tally(segment, item));
  return reduce(items, tallies);
}

std::vector<std::vector<MorphItem>> group_by_lang(std::span<const MorphItem> items) {
  std::vector<std::vector<MorphItem>> groups;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& item : items) {
    const auto [it, inserted] = index.emplace(item.lang, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(item);
  }
  return groups;
}

GroupComparison compare_groups(std::span<const MorphScoreReport> reports,
                               const std::map<std::string, std::string>& profile) {
  std::map<std::string, std::pair<std::vector<double>, std::vector<std::string>>> groups;
  for (const auto& r : reports) {
    const auto it = profile.find(r.lang);
    if (it == profile.end()) {
      throw StatError("compare_groups: no morphological type for '" + r.lang + "'");
    }
    if (!r.strict_defined()) {
      throw StatError("compare_groups: '" + r.lang + "' has no scored items");
    }
    groups[it->second].first.push_back(r.score_strict);
    groups[it->second].second.push_back(r.lang);
  }
  if (groups.size() != 2) {
    throw StatError("compare_groups: expected 2 morphological types, found " +
                    std::to_string(groups.size()));
  }
  auto first = groups.begin();
  auto second = std::next(first);
  for (const auto& [name, g] : groups) {
    if (g.first.size() < 2) {
      throw StatError("compare_groups: group '" + name + "' has " +
                      std::to_string(g.first.size()) + " member(s), need 2");
    }
  }
  GroupComparison c;
  c.group_a = first->first;
  c.group_b = second->first;
  c.langs_a = first->second.second;
  c.langs_b = second->second.second;
  c.test = stats::welch_t(first->second.first, second->second.first);
  return c;
}

std::string report_csv_header() {
  return "lang,n_total,n_excluded_single_token,n_scored,score_strict,score_lenient,"
         "mean_fertility,mean_word_len,one_token_count,one_token_prop\n";
}

std::string report_csv_row(const MorphScoreReport& r) {
  using textio::format_double;
  const std::vector<std::string> fields = {
      r.lang,
      std::to_string(r.n_total),
      std::to_string(r.n_excluded_single_token),
      std::to_string(r.n_scored),
      format_double(r.score_strict),
      format_double(r.score_lenient),
      format_double(r.mean_fertility),
      format_double(r.mean_word_len),
      std::to_string(r.one_token_count),
      format_double(r.one_token_prop)};
  return textio::csv_row(fields);
}

void write_reports_csv(std::ostream& out, std::span<const MorphScoreReport> reports) {
  out << report_csv_header();
  for (const auto& r : reports) out << report_csv_row(r);
}

}  // namespace morphalign::morph
