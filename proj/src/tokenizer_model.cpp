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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "morphalign/errors.hpp"
#include "morphalign/tokenizer.hpp"
#include "morphalign/utf8.hpp"

namespace morphalign::tok {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string merge_key(std::string_view left, std::string_view right) {
  // Tokens never contain whitespace, so a space is an unambiguous separator.
  std::string key;
  key.reserve(left.size() + right.size() + 1);
  key.append(left).push_back(' ');
  key.append(right);
  return key;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<std::string> default_specials() {
  return {std::string(kUnk), std::string(kBos), std::string(kEos),
          std::string(kPad)};
}

TokenizerModel TokenizerModel::bpe(std::vector<std::string> vocab,
                                   std::vector<Merge> merges, std::string marker,
                                   std::vector<std::string> specials,
                                   std::optional<int> vocab_size_target) {
  TokenizerModel m;
  m.kind_ = ModelKind::kBpe;
  m.vocab_ = std::move(vocab);
  m.merges_ = std::move(merges);
  m.marker_ = std::move(marker);
  m.specials_ = std::move(specials);
  m.vocab_size_target_ = vocab_size_target.value_or(m.size());
  m.build_index();
  return m;
}

TokenizerModel TokenizerModel::unigram(std::vector<std::string> vocab,
                                       std::vector<double> scores,
                                       std::string marker,
                                       std::vector<std::string> specials,
                                       std::optional<int> vocab_size_target) {
  TokenizerModel m;
  m.kind_ = ModelKind::kUnigram;
  m.vocab_ = std::move(vocab);
  m.scores_ = std::move(scores);
  m.marker_ = std::move(marker);
  m.specials_ = std::move(specials);
  m.vocab_size_target_ = vocab_size_target.value_or(m.size());
  m.build_index();
  return m;
}

void TokenizerModel::build_index() {
  if (marker_.empty() || utf8::length(marker_) != 1) {
    throw FormatError("marker must be exactly one character");
  }
  ids_.clear();
  for (std::size_t i = 0; i < specials_.size(); ++i) {
    if (specials_[i].empty()) throw FormatError("specials[" + std::to_string(i) + "]: empty");
    if (!ids_.emplace(specials_[i], static_cast<int>(i)).second) {
      throw FormatError("specials[" + std::to_string(i) + "]: duplicate '" +
                        specials_[i] + "'");
    }
  }
  max_piece_chars_ = 0;
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    const std::string& piece = vocab_[i];
    if (piece.empty()) throw FormatError("vocab[" + std::to_string(i) + "]: empty token");
    if (utf8::contains_space(piece)) {
      throw FormatError("vocab[" + std::to_string(i) + "]: token contains whitespace");
    }
    if (!ids_.emplace(piece, static_cast<int>(specials_.size() + i)).second) {
      throw FormatError("vocab[" + std::to_string(i) + "]: duplicate or special token '" +
                        piece + "'");
    }
    max_piece_chars_ = std::max(max_piece_chars_, utf8::length(piece));
  }
  if (vocab_size_target_ <= 0) throw FormatError("vocab_size_target must be positive");
  if (size() > vocab_size_target_) {
    throw FormatError("vocab holds " + std::to_string(size()) +
                      " entries, above vocab_size_target " +
                      std::to_string(vocab_size_target_));
  }

  merge_ranks_.clear();
  if (kind_ == ModelKind::kBpe) {
    if (!scores_.empty()) throw FormatError("scores: not allowed for a BPE model");
    for (std::size_t r = 0; r < merges_.size(); ++r) {
      const auto& [left, right] = merges_[r];
      const std::string where = "merges[" + std::to_string(r) + "]";
      if (!ids_.contains(left) || !ids_.contains(right)) {
        throw FormatError(where + ": references a token absent from vocab");
      }
      if (!ids_.contains(left + right)) {
        throw FormatError(where + ": product '" + left + right + "' absent from vocab");
      }
      if (!merge_ranks_.emplace(merge_key(left, right), static_cast<int>(r)).second) {
        throw FormatError(where + ": duplicate merge");
      }
    }
    min_score_ = 0.0;
  } else {
    if (!merges_.empty()) throw FormatError("merges: not allowed for a unigram model");
    if (scores_.size() != vocab_.size()) {
      throw FormatError("scores: length " + std::to_string(scores_.size()) +
                        " does not match vocab length " + std::to_string(vocab_.size()));
    }
    min_score_ = 0.0;
    for (std::size_t i = 0; i < scores_.size(); ++i) {
      if (!std::isfinite(scores_[i]) || scores_[i] > 0.0) {
        throw FormatError("scores[" + std::to_string(i) + "]: must be finite and <= 0");
      }
      min_score_ = std::min(min_score_, scores_[i]);
    }
  }
}

std::optional<int> TokenizerModel::id_of(std::string_view piece) const {
  const auto it = ids_.find(std::string(piece));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& TokenizerModel::piece(int id) const {
  if (id < 0 || id >= size()) throw InputError("token id out of range: " + std::to_string(id));
  const auto n_specials = static_cast<int>(specials_.size());
  return id < n_specials ? specials_[id] : vocab_[id - n_specials];
}

std::optional<int> TokenizerModel::special_id(std::string_view name) const {
  for (std::size_t i = 0; i < specials_.size(); ++i) {
    if (specials_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> TokenizerModel::merge_rank(std::string_view left,
                                              std::string_view right) const {
  const auto it = merge_ranks_.find(merge_key(left, right));
  if (it == merge_ranks_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> TokenizerModel::score_of(std::string_view piece) const {
  if (kind_ != ModelKind::kUnigram) return std::nullopt;
  const auto id = id_of(piece);
  if (!id || is_special(*id)) return std::nullopt;
  return scores_[*id - specials_.size()];
}

bool TokenizerModel::operator==(const TokenizerModel& other) const {
  return kind_ == other.kind_ && vocab_ == other.vocab_ &&
         merges_ == other.merges_ && scores_ == other.scores_ &&
         marker_ == other.marker_ && specials_ == other.specials_ &&
         vocab_size_target_ == other.vocab_size_target_;
}

std::string to_json(const TokenizerModel& model) {
  ordered_json j;
  j["kind"] = model.kind() == ModelKind::kBpe ? "bpe" : "unigram";
  j["marker"] = model.marker();
  j["specials"] = model.specials();
  j["vocab"] = model.vocab();
  if (model.kind() == ModelKind::kBpe) {
    ordered_json merges = ordered_json::array();
    for (const auto& [l, r] : model.merges()) merges.push_back({l, r});
    j["merges"] = std::move(merges);
  } else {
    j["scores"] = model.scores();
  }
  j["vocab_size_target"] = model.vocab_size_target();
  return j.dump(2) + "\n";
}

TokenizerModel from_json(std::string_view text, std::string_view origin) {
  const std::string where(origin);
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(where + ": " + e.what());
  }
  auto field = [&](const char* name) -> const ordered_json& {
    if (!j.is_object() || !j.contains(name)) {
      throw FormatError(where + ": missing field '" + name + "'");
    }
    return j.at(name);
  };
  auto strings = [&](const char* name) {
    const auto& f = field(name);
    if (!f.is_array()) throw FormatError(where + ": field '" + name + "' must be an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!f[i].is_string()) {
        throw FormatError(where + ": field '" + name + "'[" + std::to_string(i) +
                          "] must be a string");
      }
      out.push_back(f[i].get<std::string>());
    }
    return out;
  };

  const auto& kind = field("kind");
  if (!kind.is_string()) throw FormatError(where + ": field 'kind' must be a string");
  const auto& marker_field = field("marker");
  if (!marker_field.is_string()) throw FormatError(where + ": field 'marker' must be a string");
  std::string marker = marker_field.get<std::string>();
  auto specials = strings("specials");
  auto vocab = strings("vocab");
  std::optional<int> target;
  if (j.contains("vocab_size_target")) {
    if (!j["vocab_size_target"].is_number_integer()) {
      throw FormatError(where + ": field 'vocab_size_target' must be an integer");
    }
    target = j["vocab_size_target"].get<int>();
  }

  try {
    if (kind == "bpe") {
      const auto& m = field("merges");
      if (!m.is_array()) throw FormatError("field 'merges' must be an array");
      std::vector<TokenizerModel::Merge> merges;
      for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& pair = m[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
            !pair[1].is_string()) {
          throw FormatError("field 'merges'[" + std::to_string(i) +
                            "] must be a 2-array of strings");
        }
        merges.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
      }
      return TokenizerModel::bpe(std::move(vocab), std::move(merges), std::move(marker),
                                 std::move(specials), target);
    }
    if (kind == "unigram") {
      const auto& s = field("scores");
      if (!s.is_array()) throw FormatError("field 'scores' must be an array");
      std::vector<double> scores;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s[i].is_number()) {
          throw FormatError("field 'scores'[" + std::to_string(i) + "] must be a number");
        }
        scores.push_back(s[i].get<double>());
      }
      return TokenizerModel::unigram(std::move(vocab), std::move(scores), std::move(marker),
                                     std::move(specials), target);
    }
  } catch (const FormatError& e) {
    throw FormatError(where + ": " + e.what());
  }
  throw FormatError(where + ": field 'kind' must be \"bpe\" or \"unigram\"");
}

void save_model(const TokenizerModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << to_json(model);
}

TokenizerModel load_model(const std::filesystem::path& path) {
  return from_json(read_file(path), path.string());
}

TokenizerModel import_text_model(const std::filesystem::path& vocab_path,
                                 const std::optional<std::filesystem::path>& merges_path,
                                 std::string marker, std::vector<std::string> specials) {
  const std::unordered_set<std::string> special_set(specials.begin(), specials.end());
  std::vector<std::string> vocab;
  std::vector<double> scores;
  bool all_scored = true;
  {
    std::istringstream in(read_file(vocab_path));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto tab = line.find('\t');
      std::string token = line.substr(0, tab);
      if (special_set.contains(token)) continue;
      vocab.push_back(token);
      if (tab == std::string::npos) {
        all_scored = false;
        continue;
      }
      try {
        std::size_t used = 0;
        const std::string field = line.substr(tab + 1);
        scores.push_back(std::stod(field, &used));
        if (used != field.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw FormatError(vocab_path.string() + ":" + std::to_string(lineno) +
                          ": invalid score");
      }
    }
  }
  if (merges_path) {
    std::vector<TokenizerModel::Merge> merges;
    std::istringstream in(read_file(*merges_path));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.starts_with("#version")) continue;
      const auto parts = utf8::split_whitespace(line);
      if (parts.size() != 2) {
        throw FormatError(merges_path->string() + ":" + std::to_string(lineno) +
                          ": expected 'left right'");
      }
      merges.emplace_back(parts[0], parts[1]);
    }
    try {
      return TokenizerModel::bpe(std::move(vocab), std::move(merges), std::move(marker),
                                 std::move(specials));
    } catch (const FormatError& e) {
      throw FormatError(merges_path->string() + ": " + e.what());
    }
  }
  if (!all_scored) {
    throw FormatError(vocab_path.string() +
                      ": unigram import needs a score on every vocab line");
  }
  try {
    return TokenizerModel::unigram(std::move(vocab), std::move(scores), std::move(marker),
                                   std::move(specials));
  } catch (const FormatError& e) {
    throw FormatError(vocab_path.string() + ": " + e.what());
  }
}

}  // namespace morphalign::tok
