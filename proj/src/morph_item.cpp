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

#include "morphalign/morph_item.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "morphalign/errors.hpp"
#include "morphalign/textio.hpp"
#include "morphalign/utf8.hpp"

namespace morphalign {

std::string_view to_string(Source s) {
  switch (s) {
    case Source::kUD: return "UD";
    case Source::kUniMorph: return "UniMorph";
    case Source::kSynthetic: return "Synthetic";
  }
  return "UD";
}

Source parse_source(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "ud") return Source::kUD;
  if (lower == "unimorph") return Source::kUniMorph;
  if (lower == "synthetic") return Source::kSynthetic;
  throw InputError("unknown source '" + std::string(s) + "'");
}

void validate(const MorphItem& item) {
  if (item.word.empty()) throw InputError("item has an empty word");
  if (utf8::contains_space(item.word)) {
    throw InputError("item word contains whitespace: '" + item.word + "'");
  }
  const std::size_t len = utf8::length(item.word);
  if (item.boundary == 0 || item.boundary >= len) {
    throw InputError("boundary " + std::to_string(item.boundary) + " is not interior to '" +
                     item.word + "' (length " + std::to_string(len) + ")");
  }
}

std::vector<MorphItem> read_dataset_tsv(std::istream& in, std::string_view origin) {
  const std::string where(origin);
  std::vector<MorphItem> items;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  std::size_t col_word = 0, col_boundary = 0, col_lang = 0, col_source = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = textio::split(line, '\t');
    if (!header_seen) {
      auto find = [&](std::string_view name) {
        const auto it = std::find(fields.begin(), fields.end(), name);
        if (it == fields.end()) {
          throw FormatError(where + ":" + std::to_string(lineno) + ": header lacks column '" +
                            std::string(name) + "'");
        }
        return static_cast<std::size_t>(it - fields.begin());
      };
      col_word = find("word");
      col_boundary = find("boundary");
      col_lang = find("lang");
      col_source = find("source");
      header_seen = true;
      continue;
    }
    const std::string ctx = where + ":" + std::to_string(lineno) + ": ";
    const std::size_t need = std::max({col_word, col_boundary, col_lang, col_source}) + 1;
    if (fields.size() < need) {
      throw FormatError(ctx + "expected " + std::to_string(need) + " columns, got " +
                        std::to_string(fields.size()));
    }
    MorphItem item;
    item.word = fields[col_word];
    item.lang = fields[col_lang];
    try {
      item.boundary = textio::parse_size(fields[col_boundary]);
      item.source = parse_source(fields[col_source]);
      validate(item);
    } catch (const Error& e) {
      throw FormatError(ctx + e.what());
    }
    items.push_back(std::move(item));
  }
  if (!header_seen) throw FormatError(where + ": missing header");
  return items;
}

std::vector<MorphItem> read_dataset_tsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  return read_dataset_tsv(in, path.string());
}

void write_dataset_tsv(std::ostream& out, std::span<const MorphItem> items) {
  out << "word\tboundary\tlang\tsource\n";
  for (const auto& item : items) {
    out << item.word << '\t' << item.boundary << '\t' << item.lang << '\t'
        << to_string(item.source) << '\n';
  }
}

void write_dataset_tsv(const std::filesystem::path& path, std::span<const MorphItem> items) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  write_dataset_tsv(out, items);
}

}  // namespace morphalign
