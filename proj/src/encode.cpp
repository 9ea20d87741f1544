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

#include <limits>

#include "morphalign/errors.hpp"
#include "morphalign/parallel.hpp"
#include "morphalign/tokenizer.hpp"
#include "morphalign/utf8.hpp"

namespace morphalign::tok {
namespace {

// Score charged for a character no vocabulary piece covers.
constexpr double kUnknownPenalty = 10.0;

int unknown_id(const TokenizerModel& model) {
  return model.special_id(kUnk).value_or(-1);
}

std::vector<std::string> bpe_pieces(const TokenizerModel& model,
                                    std::vector<std::string> symbols) {
  // Repeatedly merge the adjacent pair with the lowest learned rank; among
  // equal ranks the leftmost occurrence goes first.
  for (;;) {
    int best_rank = std::numeric_limits<int>::max();
    std::size_t best_at = 0;
    for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
      const auto rank = model.merge_rank(symbols[i], symbols[i + 1]);
      if (rank && *rank < best_rank) {
        best_rank = *rank;
        best_at = i;
      }
    }
    if (best_rank == std::numeric_limits<int>::max()) break;
    symbols[best_at] += symbols[best_at + 1];
    symbols.erase(symbols.begin() + static_cast<std::ptrdiff_t>(best_at) + 1);
  }
  return symbols;
}

struct Lattice {
  double score = -std::numeric_limits<double>::infinity();
  std::size_t count = 0;
  std::vector<std::string> pieces;
  bool reachable = false;
};

// True when (score, count, pieces) beats `cur`: higher score, then fewer
// tokens, then lexicographically smaller piece sequence.
bool improves(const Lattice& cur, double score, std::size_t count,
              const std::vector<std::string>& pieces) {
  if (!cur.reachable) return true;
  if (score != cur.score) return score > cur.score;
  if (count != cur.count) return count < cur.count;
  return pieces < cur.pieces;
}

std::vector<std::string> unigram_pieces(const TokenizerModel& model,
                                        const std::vector<std::string>& chars) {
  const std::size_t n = chars.size();
  const std::size_t max_len = std::max<std::size_t>(1, model.max_piece_chars());
  const double unknown_score = model.min_score() - kUnknownPenalty;
  const std::optional<double> lone_marker = model.score_of(model.marker());
  std::vector<Lattice> best(n + 1);
  best[0].reachable = true;
  best[0].score = 0.0;

  auto relax = [&](std::size_t from, std::size_t to, const std::string& piece,
                   double score) {
    const Lattice& src = best[from];
    std::vector<std::string> pieces = src.pieces;
    pieces.push_back(piece);
    const double total = src.score + score;
    if (improves(best[to], total, src.count + 1, pieces)) {
      best[to].reachable = true;
      best[to].score = total;
      best[to].count = src.count + 1;
      best[to].pieces = std::move(pieces);
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (!best[i].reachable) continue;
    std::string sub;
    bool single_char_covered = false;
    for (std::size_t j = i + 1; j <= n && j - i <= max_len; ++j) {
      sub += chars[j - 1];
      // At the word start a piece may carry the marker or not; the marked
      // form wins on equal score.
      std::optional<std::string> chosen;
      double chosen_score = 0.0;
      if (i == 0) {
        const std::string marked = model.marker() + sub;
        if (const auto s = model.score_of(marked)) {
          chosen = marked;
          chosen_score = *s;
        }
      }
      if (auto s = model.score_of(sub)) {
        // An unmarked word-initial piece is spelled as a lone marker
        // followed by the piece.
        if (i == 0 && lone_marker) *s += *lone_marker;
        if (!chosen || *s > chosen_score) {
          chosen = sub;
          chosen_score = *s;
        }
      }
      if (!chosen) continue;
      if (j == i + 1) single_char_covered = true;
      relax(i, j, *chosen, chosen_score);
    }
    if (!single_char_covered) {
      relax(i, i + 1, i == 0 ? model.marker() + chars[0] : chars[i], unknown_score);
    }
  }
  auto pieces = std::move(best[n].pieces);
  if (lone_marker && !pieces.front().starts_with(model.marker())) {
    pieces.insert(pieces.begin(), model.marker());
  }
  return pieces;
}

}  // namespace

Segmentation encode_word(const TokenizerModel& model, std::string_view word) {
  if (word.empty()) throw InputError("encode_word: empty word");
  if (utf8::contains_space(word)) {
    throw InputError("encode_word: word contains whitespace: '" + std::string(word) + "'");
  }
  auto chars = utf8::split_chars(word);

  Segmentation seg;
  seg.word = std::string(word);
  if (model.kind() == ModelKind::kBpe) {
    std::vector<std::string> symbols = chars;
    symbols.front() = model.marker() + symbols.front();
    seg.pieces = bpe_pieces(model, std::move(symbols));
  } else {
    seg.pieces = unigram_pieces(model, chars);
  }

  const int unk = unknown_id(model);
  std::size_t position = 0;
  for (std::size_t k = 0; k < seg.pieces.size(); ++k) {
    const std::string& piece = seg.pieces[k];
    const auto id = model.id_of(piece);
    seg.ids.push_back(id && !model.is_special(*id) ? *id : unk);
    // A lone leading marker carries the word start but no characters.
    if (k == 0 && piece == model.marker() && seg.pieces.size() > 1) continue;
    std::string token = piece;
    if (k == 0 && token.starts_with(model.marker())) token.erase(0, model.marker().size());
    position += utf8::length(token);
    if (k + 1 < seg.pieces.size()) seg.boundaries.push_back(position);
    seg.tokens.push_back(std::move(token));
  }
  return seg;
}

Segmentation segmentation_from_tokens(std::string_view word,
                                      std::vector<std::string> tokens) {
  std::string joined;
  for (const auto& t : tokens) {
    if (t.empty()) throw InputError("segmentation_from_tokens: empty token");
    joined += t;
  }
  if (joined != word) {
    throw InputError("segmentation_from_tokens: tokens do not spell '" + std::string(word) + "'");
  }
  Segmentation seg;
  seg.word = std::string(word);
  std::size_t position = 0;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    position += utf8::length(tokens[k]);
    if (k + 1 < tokens.size()) seg.boundaries.push_back(position);
  }
  seg.pieces = tokens;
  seg.ids.assign(tokens.size(), -1);
  seg.tokens = std::move(tokens);
  return seg;
}

std::vector<int> encode_text(const TokenizerModel& model, std::string_view text,
                             bool add_specials) {
  std::vector<int> ids;
  const auto words = utf8::split_whitespace(text);
  if (add_specials) {
    const auto bos = model.special_id(kBos);
    if (!bos) throw InputError("encode_text: model has no " + std::string(kBos) + " special");
    ids.push_back(*bos);
  }
  for (const auto& w : words) {
    const Segmentation seg = encode_word(model, w);
    for (const int id : seg.ids) {
      if (id < 0) {
        throw InputError("encode_text: unknown character in '" + w +
                         "' and the model has no " + std::string(kUnk) + " special");
      }
      ids.push_back(id);
    }
  }
  if (add_specials) {
    const auto eos = model.special_id(kEos);
    if (!eos) throw InputError("encode_text: model has no " + std::string(kEos) + " special");
    ids.push_back(*eos);
  }
  return ids;
}

std::string decode(const TokenizerModel& model, std::span<const int> ids) {
  const auto unk = model.special_id(kUnk);
  std::string joined;
  for (const int id : ids) {
    if (model.is_special(id)) {
      if (unk && id == *unk) joined += model.piece(id);
      continue;
    }
    joined += model.piece(id);
  }
  std::string out;
  const std::string& marker = model.marker();
  for (std::size_t i = 0; i < joined.size();) {
    if (joined.compare(i, marker.size(), marker) == 0) {
      if (!out.empty()) out.push_back(' ');
      i += marker.size();
    } else {
      out.push_back(joined[i++]);
    }
  }
  return out;
}

namespace {

std::vector<Segmentation> encode_line(const TokenizerModel& model, const std::string& line) {
  std::vector<Segmentation> out;
  for (const auto& w : utf8::split_whitespace(line)) out.push_back(encode_word(model, w));
  return out;
}

}  // namespace

std::vector<std::vector<Segmentation>> encode_corpus(const TokenizerModel& model,
                                                     std::span<const std::string> lines) {
  return parallel::map_ordered<std::vector<Segmentation>>(
      lines.size(), [&](std::size_t i) { return encode_line(model, lines[i]); });
}

std::vector<std::vector<Segmentation>> encode_corpus_serial(
    const TokenizerModel& model, std::span<const std::string> lines) {
  std::vector<std::vector<Segmentation>> out;
  out.reserve(lines.size());
  for (const auto& line : lines) out.push_back(encode_line(model, line));
  return out;
}

}  // namespace morphalign::tok
